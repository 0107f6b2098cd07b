"""Sparse multivariate polynomials over exact Gaussian-rational coefficients.

Representation
--------------
A :class:`MultiPoly` fixes an ordered tuple of variable names at construction
and stores a mapping ``{exponent tuple -> GaussianRational}``.  Zero
coefficients are never stored, so the zero polynomial has an empty term map
and equality is plain structural comparison.  Values are immutable after
construction; every operation returns a new polynomial.

Two polynomials only combine when their variable tuples are identical.
Mixing different variable lists raises instead of silently capturing symbols;
use :meth:`MultiPoly.aligned` to embed a polynomial into a larger variable
tuple explicitly.

Text format
-----------
``parse_poly`` and :meth:`MultiPoly.render` speak the grammar

    expr     := term (('+'|'-') term)*
    term     := factor ('*' factor)*
    factor   := rational | symbol ('^' uint)? | '(' expr ')'
    rational := int ('/' uint)?

with insignificant whitespace.  Rendering emits terms in graded-lexicographic
order (higher total degree first; ties broken by the exponent tuple, so the
first-listed variable is the most significant) and always stays inside the
grammar, so output re-parses bit-exactly.  Only real coefficients are
renderable; the grammar has no imaginary literal.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .scalars import GaussianRational

__all__ = ["MultiPoly", "PolyParseError", "gens", "parse_poly", "poly_derivative"]

Exponents = tuple[int, ...]

_SCALARS = (int, Fraction, GaussianRational)
ScalarLike = int | Fraction | GaussianRational


class PolyParseError(ValueError):
    """Syntax or symbol error in polynomial text, with a character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (offset {position})")
        self.position = position


def _as_coeff(value: ScalarLike) -> GaussianRational:
    coerced = GaussianRational._coerce(value)
    if coerced is None:
        raise TypeError(f"cannot use {type(value).__name__} as a coefficient")
    return coerced


class MultiPoly:
    """Immutable sparse polynomial in a fixed tuple of variables."""

    __slots__ = ("_variables", "_terms", "_hash")

    def __init__(
        self,
        variables: Iterable[str],
        terms: Mapping[Exponents, ScalarLike] | None = None,
    ):
        if isinstance(variables, str):
            raise TypeError("variables must be a sequence of names, not a string")
        names = tuple(variables)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        width = len(names)
        cleaned: dict[Exponents, GaussianRational] = {}
        for exps, raw in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != width:
                raise ValueError(
                    f"exponent tuple {exps} does not match {width} variable(s)"
                )
            if any(e < 0 or not isinstance(e, int) for e in exps):
                raise ValueError(f"exponents must be non-negative ints, got {exps}")
            coeff = _as_coeff(raw)
            if coeff:
                cleaned[exps] = coeff
        self._variables = names
        self._terms = cleaned
        self._hash: int | None = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables: Iterable[str]) -> "MultiPoly":
        return cls(variables, {})

    @classmethod
    def one(cls, variables: Iterable[str]) -> "MultiPoly":
        return cls.constant(variables, 1)

    @classmethod
    def constant(cls, variables: Iterable[str], value: ScalarLike) -> "MultiPoly":
        names = tuple(variables)
        return cls(names, {(0,) * len(names): value})

    @classmethod
    def variable(cls, name: str, variables: Iterable[str]) -> "MultiPoly":
        names = tuple(variables)
        if name not in names:
            raise ValueError(f"{name!r} is not among variables {names}")
        exps = tuple(1 if v == name else 0 for v in names)
        return cls(names, {exps: 1})

    # -- structure ---------------------------------------------------------

    @property
    def variables(self) -> tuple[str, ...]:
        return self._variables

    @property
    def terms(self) -> dict[Exponents, GaussianRational]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(not any(exps) for exps in self._terms)

    def constant_value(self) -> GaussianRational:
        """The coefficient of the empty monomial (the value, if constant)."""
        return self._terms.get((0,) * len(self._variables), GaussianRational())

    def coefficient(self, exps: Exponents) -> GaussianRational:
        return self._terms.get(tuple(exps), GaussianRational())

    def total_degree(self) -> int:
        """Maximum total degree, or -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(exps) for exps in self._terms)

    def is_real_valued(self) -> bool:
        return all(c.im == 0 for c in self._terms.values())

    # -- ring operations ---------------------------------------------------

    def _lift(self, other: object) -> "MultiPoly | None":
        if isinstance(other, MultiPoly):
            if other._variables != self._variables:
                raise ValueError(
                    f"variable lists differ ({self._variables} vs {other._variables}); "
                    "align explicitly with .aligned()"
                )
            return other
        if isinstance(other, _SCALARS):
            return MultiPoly.constant(self._variables, other)
        return None

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiPoly):
            if other._variables != self._variables:
                return False
            return self._terms == other._terms
        if isinstance(other, _SCALARS):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash(
                    (self._variables, frozenset(self._terms.items()))
                )
        return self._hash

    def __add__(self, other: object) -> "MultiPoly":
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        out = dict(self._terms)
        for exps, coeff in rhs._terms.items():
            total = out.get(exps, GaussianRational()) + coeff
            if total:
                out[exps] = total
            else:
                out.pop(exps, None)
        return MultiPoly(self._variables, out)

    __radd__ = __add__

    def __sub__(self, other: object) -> "MultiPoly":
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> "MultiPoly":
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(
            self._variables, {e: -c for e, c in self._terms.items()}
        )

    def __mul__(self, other: object) -> "MultiPoly":
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        out: dict[Exponents, GaussianRational] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in rhs._terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                total = out.get(exps, GaussianRational()) + c1 * c2
                if total:
                    out[exps] = total
                else:
                    out.pop(exps, None)
        return MultiPoly(self._variables, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiPoly":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            raise ValueError("negative polynomial powers are not defined")
        result = MultiPoly.one(self._variables)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- calculus and rebasing ----------------------------------------------

    def derivative(self, name: str) -> "MultiPoly":
        """Exact formal partial derivative with respect to ``name``."""
        if name not in self._variables:
            raise ValueError(f"unknown variable {name!r}; have {self._variables}")
        idx = self._variables.index(name)
        out: dict[Exponents, GaussianRational] = {}
        for exps, coeff in self._terms.items():
            e = exps[idx]
            if e == 0:
                continue
            lowered = exps[:idx] + (e - 1,) + exps[idx + 1 :]
            total = out.get(lowered, GaussianRational()) + coeff * e
            if total:
                out[lowered] = total
        return MultiPoly(self._variables, out)

    def aligned(self, variables: Iterable[str]) -> "MultiPoly":
        """Embed into a larger variable tuple (must contain all current names)."""
        names = tuple(variables)
        missing = [v for v in self._variables if v not in names]
        if missing:
            raise ValueError(f"target variables {names} do not contain {missing}")
        index = {v: names.index(v) for v in self._variables}
        out: dict[Exponents, GaussianRational] = {}
        for exps, coeff in self._terms.items():
            widened = [0] * len(names)
            for v, e in zip(self._variables, exps):
                widened[index[v]] = e
            out[tuple(widened)] = coeff
        return MultiPoly(names, out)

    def substitute(
        self, mapping: Mapping[str, "MultiPoly | ScalarLike"]
    ) -> "MultiPoly":
        """Substitute a polynomial or scalar for every variable.

        All values that are polynomials must share one variable tuple, which
        becomes the variable tuple of the result.
        """
        missing = [v for v in self._variables if v not in mapping]
        if missing:
            raise ValueError(f"substitution is missing variables {missing}")
        target: tuple[str, ...] | None = None
        for v in self._variables:
            value = mapping[v]
            if isinstance(value, MultiPoly):
                if target is None:
                    target = value.variables
                elif value.variables != target:
                    raise ValueError(
                        "substitution values use different variable lists"
                    )
        if target is None:
            target = ()
        values: dict[str, MultiPoly] = {}
        for v in self._variables:
            value = mapping[v]
            if isinstance(value, MultiPoly):
                values[v] = value
            else:
                values[v] = MultiPoly.constant(target, value)
        # Per-variable power tables up to the largest needed exponent.
        tables: dict[str, list[MultiPoly]] = {}
        for i, v in enumerate(self._variables):
            top = max((exps[i] for exps in self._terms), default=0)
            table = [MultiPoly.one(target)]
            for _ in range(top):
                table.append(table[-1] * values[v])
            tables[v] = table
        acc = MultiPoly.zero(target)
        for exps, coeff in self._terms.items():
            term = MultiPoly.constant(target, coeff)
            for v, e in zip(self._variables, exps):
                if e:
                    term = term * tables[v][e]
            acc = acc + term
        return acc

    # -- evaluation ----------------------------------------------------------

    def evaluate_exact(
        self, values: Mapping[str, ScalarLike]
    ) -> GaussianRational:
        """Evaluate at exact scalars; the result is an exact GaussianRational."""
        missing = [v for v in self._variables if v not in values]
        if missing:
            raise ValueError(f"evaluation is missing variables {missing}")
        tables: list[list[GaussianRational]] = []
        for i, v in enumerate(self._variables):
            point = _as_coeff(values[v])
            top = max((exps[i] for exps in self._terms), default=0)
            table = [GaussianRational(Fraction(1))]
            for _ in range(top):
                table.append(table[-1] * point)
            tables.append(table)
        acc = GaussianRational()
        for exps, coeff in self._terms.items():
            term = coeff
            for i, e in enumerate(exps):
                if e:
                    term = term * tables[i][e]
            acc = acc + term
        return acc

    def evaluate_float(self, values: Mapping[str, float | complex]):
        """Evaluate at floating-point values (complex when needed)."""
        missing = [v for v in self._variables if v not in values]
        if missing:
            raise ValueError(f"evaluation is missing variables {missing}")
        use_complex = any(c.im != 0 for c in self._terms.values()) or any(
            isinstance(values[v], complex) for v in self._variables
        )
        acc = 0j if use_complex else 0.0
        for exps, coeff in self._terms.items():
            if use_complex:
                term = complex(coeff)
            else:
                term = float(coeff.re)
            for v, e in zip(self._variables, exps):
                if e:
                    term *= values[v] ** e
            acc += term
        return acc

    # -- text form -----------------------------------------------------------

    def render(self) -> str:
        """Grammar-exact text form (graded-lex, highest degree first)."""
        if not self._terms:
            return "0"
        ordered = sorted(
            self._terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True
        )
        pieces: list[str] = []
        for i, (exps, coeff) in enumerate(ordered):
            if coeff.im != 0:
                raise ValueError(
                    "cannot render a polynomial with imaginary coefficients"
                )
            value = coeff.re
            factors = []
            for v, e in zip(self._variables, exps):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            mono = "*".join(factors)
            if i == 0:
                if not mono:
                    pieces.append(_format_fraction(value))
                elif value == 1:
                    pieces.append(mono)
                else:
                    pieces.append(f"{_format_fraction(value)}*{mono}")
            else:
                op = " - " if value < 0 else " + "
                mag = abs(value)
                if not mono:
                    pieces.append(op + _format_fraction(mag))
                elif mag == 1:
                    pieces.append(op + mono)
                else:
                    pieces.append(op + f"{_format_fraction(mag)}*{mono}")
        return "".join(pieces)

    def __str__(self) -> str:
        if self.is_real_valued():
            return self.render()
        parts = [
            f"({coeff})*{exps}" for exps, coeff in sorted(self._terms.items())
        ]
        return " + ".join(parts) or "0"

    def __repr__(self) -> str:
        return f"MultiPoly({self._variables!r}, {self._terms!r})"


def _format_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def gens(*names: str) -> tuple[MultiPoly, ...]:
    """Generator polynomials for the given variable tuple, in order."""
    return tuple(MultiPoly.variable(name, names) for name in names)


def poly_derivative(poly: MultiPoly, name: str) -> MultiPoly:
    """Free-function alias for :meth:`MultiPoly.derivative`."""
    return poly.derivative(name)


class _Parser:
    def __init__(self, text: str, variables: tuple[str, ...]):
        self.text = text
        self.pos = 0
        self.variables = variables
        self.generators = {
            name: MultiPoly.variable(name, variables) for name in variables
        }

    def fail(self, message: str, position: int | None = None) -> None:
        raise PolyParseError(
            message, self.pos if position is None else position
        )

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> MultiPoly:
        value = self.expr()
        self.skip_ws()
        if self.pos != len(self.text):
            self.fail(f"unexpected {self.peek()!r}")
        return value

    def expr(self) -> MultiPoly:
        value = self.term()
        while True:
            self.skip_ws()
            ch = self.peek()
            if ch == "+":
                self.pos += 1
                value = value + self.term()
            elif ch == "-":
                self.pos += 1
                value = value - self.term()
            else:
                return value

    def term(self) -> MultiPoly:
        value = self.factor()
        while True:
            self.skip_ws()
            if self.peek() == "*":
                self.pos += 1
                value = value * self.factor()
            else:
                return value

    def factor(self) -> MultiPoly:
        self.skip_ws()
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            value = self.expr()
            self.skip_ws()
            if self.peek() != ")":
                self.fail("expected ')'")
            self.pos += 1
            return value
        if ch == "-" or ch.isdigit():
            return MultiPoly.constant(self.variables, self.rational())
        if ch.isalpha() or ch == "_":
            start = self.pos
            name = self.symbol()
            if name not in self.generators:
                self.fail(f"unknown symbol {name!r}", start)
            value = self.generators[name]
            self.skip_ws()
            if self.peek() == "^":
                self.pos += 1
                return value ** self.uint()
            return value
        self.fail("expected a factor")
        raise AssertionError("unreachable")

    def rational(self) -> Fraction:
        negative = False
        if self.peek() == "-":
            negative = True
            self.pos += 1
            self.skip_ws()
        numerator = self.uint()
        self.skip_ws()
        if self.peek() == "/":
            self.pos += 1
            self.skip_ws()
            at = self.pos
            denominator = self.uint()
            if denominator == 0:
                self.fail("zero denominator", at)
        else:
            denominator = 1
        value = Fraction(numerator, denominator)
        return -value if negative else value

    def uint(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.fail("expected digits")
        return int(self.text[start : self.pos])

    def symbol(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        return self.text[start : self.pos]


def parse_poly(text: str, variables: Iterable[str]) -> MultiPoly:
    """Parse polynomial text over the given variables.

    Raises :class:`PolyParseError` (with ``.position``) on syntax errors,
    unknown symbols, or zero denominators.
    """
    names = tuple(variables)
    if len(set(names)) != len(names):
        raise ValueError(f"duplicate variable names in {names}")
    return _Parser(text, names).parse()
