"""Generalized complex units h^2 = a + b*h and their power coefficients.

A unit is the scalar pair (a, b); elements x + y*h multiply by reducing
h^2 back to a + b*h.  Powers h^n = a_n + b_n*h are computed three ways and
must always agree:

* recurrence            a_{n+1} = a*b_n,  b_{n+1} = a_n + b*b_n
                        (seeds a_0 = 1, b_0 = 0)
* companion matrix      powers of [[0, a], [1, b]] by squaring; the first
                        column of the n-th power is (a_n, b_n)
* root closed form      through the conjugate roots h± = (b ± sqrt(D))/2
                        with D = b^2 + 4a:
                            b_n = (h+^n - h-^n) / (h+ - h-)
                            a_n = (h+ * h-^n - h- * h+^n) / (h+ - h-)

The closed form is evaluated exactly in the quadratic extension Q[sqrt(D)]
(class :class:`Surd`), which remains valid when D = 0: writing
h^n = p_n + q_n*sqrt(D) gives b_n = 2*q_n and a_n = p_n - b*q_n identically,
with no division by h+ - h-.  A floating variant is provided for comparison.

The scalars a and b may be Fractions or polynomials; the recurrence and
matrix routes are ring-generic.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .matrices import Mat2

__all__ = [
    "ConjugateRoots",
    "GcnElement",
    "GcnUnit",
    "Surd",
    "UnitMismatchError",
    "companion_matrix",
    "companion_power",
    "conjugate_roots",
    "gcn_mul",
    "power_coeff_sequence",
    "power_coeffs",
]

POWER_METHODS = ("recurrence", "matrix", "binet", "binet_float")


class UnitMismatchError(ValueError):
    """Raised when combining elements over different units."""


@dataclass(frozen=True)
class GcnUnit:
    """The defining pair (a, b) of the relation h^2 = a + b*h."""

    a: Any
    b: Any

    @property
    def discriminant(self):
        return self.b * self.b + 4 * self.a

    @property
    def is_degenerate(self) -> bool:
        return self.discriminant == 0

    def ring_zero(self):
        return self.a * 0 + self.b * 0

    def ring_one(self):
        return self.ring_zero() + 1


@dataclass(frozen=True)
class GcnElement:
    """Element x + y*h over a fixed unit, stored as the pair (x, y)."""

    unit: GcnUnit
    re: Any
    im: Any

    def _require_same_unit(self, other: "GcnElement") -> None:
        if self.unit != other.unit:
            raise UnitMismatchError(
                f"elements use different units {self.unit} and {other.unit}"
            )

    def __add__(self, other: "GcnElement") -> "GcnElement":
        if not isinstance(other, GcnElement):
            return NotImplemented
        self._require_same_unit(other)
        return GcnElement(self.unit, self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GcnElement") -> "GcnElement":
        if not isinstance(other, GcnElement):
            return NotImplemented
        self._require_same_unit(other)
        return GcnElement(self.unit, self.re - other.re, self.im - other.im)

    def __mul__(self, other: "GcnElement") -> "GcnElement":
        if not isinstance(other, GcnElement):
            return NotImplemented
        self._require_same_unit(other)
        a, b = self.unit.a, self.unit.b
        x0, x1 = self.re, self.im
        y0, y1 = other.re, other.im
        cross = x1 * y1
        return GcnElement(
            self.unit,
            x0 * y0 + a * cross,
            x0 * y1 + x1 * y0 + b * cross,
        )

    def __pow__(self, exponent: int) -> "GcnElement":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            raise ValueError("negative element powers are out of scope")
        result = GcnElement(self.unit, self.unit.ring_one(), self.unit.ring_zero())
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result


def gcn_mul(x: GcnElement, y: GcnElement) -> GcnElement:
    """Product of two elements over the same unit."""
    return x * y


def companion_matrix(unit: GcnUnit) -> Mat2:
    """The matrix [[0, a], [1, b]] advancing (a_n, b_n) to (a_{n+1}, b_{n+1})."""
    zero = unit.ring_zero()
    one = unit.ring_one()
    return Mat2(zero, unit.a, one, unit.b)


def companion_power(unit: GcnUnit, n: int) -> Mat2:
    """n-th power of the companion matrix, by exponentiation by squaring."""
    if n < 0:
        raise ValueError("power index must be non-negative")
    return companion_matrix(unit) ** n


@dataclass(frozen=True)
class Surd:
    """Exact element p + q*sqrt(delta) of a fixed quadratic extension."""

    p: Any
    q: Any
    delta: Any

    def _check(self, other: "Surd") -> None:
        if self.delta != other.delta:
            raise ValueError("surds live in different quadratic extensions")

    def __add__(self, other: object) -> "Surd":
        if isinstance(other, Surd):
            self._check(other)
            return Surd(self.p + other.p, self.q + other.q, self.delta)
        return Surd(self.p + other, self.q, self.delta)

    __radd__ = __add__

    def __sub__(self, other: object) -> "Surd":
        if isinstance(other, Surd):
            self._check(other)
            return Surd(self.p - other.p, self.q - other.q, self.delta)
        return Surd(self.p - other, self.q, self.delta)

    def __neg__(self) -> "Surd":
        return Surd(-self.p, -self.q, self.delta)

    def __mul__(self, other: object) -> "Surd":
        if isinstance(other, Surd):
            self._check(other)
            return Surd(
                self.p * other.p + self.q * other.q * self.delta,
                self.p * other.q + self.q * other.p,
                self.delta,
            )
        return Surd(self.p * other, self.q * other, self.delta)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Surd":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            raise ValueError("negative surd powers are not needed here")
        result = Surd(self.p * 0 + 1, self.q * 0, self.delta)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "Surd":
        return Surd(self.p, -self.q, self.delta)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Surd):
            if self.p != other.p or self.q != other.q:
                return False
            return self.delta == other.delta or (self.q == 0 and other.q == 0)
        # Scalar comparison: only radical-free surds equal plain scalars.
        return self.q == 0 and self.p == other

    def __hash__(self) -> int:
        if self.q == 0:
            return hash(self.p)
        return hash((self.p, self.q, self.delta))

    def numeric(self) -> float | complex:
        """Floating value; complex when delta < 0."""
        d = float(self.delta)
        if d >= 0:
            return float(self.p) + float(self.q) * math.sqrt(d)
        return complex(float(self.p), float(self.q) * math.sqrt(-d))

    def __str__(self) -> str:
        if self.q == 0:
            return str(self.p)
        try:
            negative = self.q < 0
        except TypeError:
            negative = False
        sign, q = ("-", -self.q) if negative else ("+", self.q)
        return f"{self.p} {sign} {q}*sqrt({self.delta})"


@dataclass(frozen=True)
class ConjugateRoots:
    """The two roots h± = (b ± sqrt(b^2 + 4a))/2 of the defining quadratic."""

    unit: GcnUnit
    h_plus: Surd
    h_minus: Surd
    degenerate: bool

    def numeric(self) -> tuple[float | complex, float | complex]:
        return (self.h_plus.numeric(), self.h_minus.numeric())


def conjugate_roots(unit: GcnUnit) -> ConjugateRoots:
    """Roots of h^2 = a + b*h as exact surds over the unit's ring.

    Works for rational and polynomial-valued units alike; use ``.numeric()``
    for floating values (scalar units only).
    """
    delta = unit.discriminant
    half = Fraction(1, 2)
    p = unit.b * half
    return ConjugateRoots(
        unit,
        Surd(p, half, delta),
        Surd(p, -half, delta),
        delta == 0,
    )


def _require_rational_unit(unit: GcnUnit) -> tuple[Fraction, Fraction]:
    if not isinstance(unit.a, (int, Fraction)) or not isinstance(
        unit.b, (int, Fraction)
    ):
        raise TypeError(
            "this method needs a rational scalar unit; use 'recurrence' or "
            "'matrix' for polynomial-valued units"
        )
    return Fraction(unit.a), Fraction(unit.b)


def _binet_exact(unit: GcnUnit, n: int) -> tuple[Fraction, Fraction]:
    a, b = _require_rational_unit(unit)
    delta = b * b + 4 * a
    root = Surd(b / 2, Fraction(1, 2), delta)
    power = root ** n
    b_n = 2 * power.q
    a_n = power.p - b * power.q
    return (a_n, b_n)


def _binet_float(unit: GcnUnit, n: int) -> tuple[float, float]:
    a = float(unit.a)
    b = float(unit.b)
    delta = b * b + 4.0 * a
    if n == 0:
        return (1.0, 0.0)
    if n == 1:
        return (0.0, 1.0)
    if delta == 0.0:
        half_b = b / 2.0
        b_n = n * half_b ** (n - 1)
        b_prev = (n - 1) * half_b ** (n - 2)
        return (a * b_prev, b_n)
    sq = cmath.sqrt(complex(delta))
    h_plus = (b + sq) / 2.0
    h_minus = (b - sq) / 2.0
    hp_n = h_plus ** n
    hm_n = h_minus ** n
    b_n = (hp_n - hm_n) / sq
    a_n = (h_plus * hm_n - h_minus * hp_n) / sq
    return (a_n.real, b_n.real)


def power_coeffs(unit: GcnUnit, n: int, method: str = "recurrence"):
    """The pair (a_n, b_n) with h^n = a_n + b_n*h.

    ``method`` is one of ``recurrence``, ``matrix``, ``binet`` (exact surd
    arithmetic, rational units only) or ``binet_float`` (floating
    approximation, flagged by its float return type).
    """
    if n < 0:
        raise ValueError("power index must be non-negative")
    if method == "recurrence":
        a_n, b_n = unit.ring_one(), unit.ring_zero()
        for _ in range(n):
            a_n, b_n = unit.a * b_n, a_n + unit.b * b_n
        return (a_n, b_n)
    if method == "matrix":
        power = companion_power(unit, n)
        return (power.m11, power.m21)
    if method == "binet":
        return _binet_exact(unit, n)
    if method == "binet_float":
        _require_rational_unit(unit)
        return _binet_float(unit, n)
    raise ValueError(f"unknown method {method!r}; expected one of {POWER_METHODS}")


def power_coeff_sequence(unit: GcnUnit, n_max: int) -> list[tuple[Any, Any]]:
    """[(a_0, b_0), ..., (a_{n_max}, b_{n_max})] by the recurrence."""
    if n_max < 0:
        raise ValueError("power index must be non-negative")
    a_n, b_n = unit.ring_one(), unit.ring_zero()
    out = [(a_n, b_n)]
    for _ in range(n_max):
        a_n, b_n = unit.a * b_n, a_n + unit.b * b_n
        out.append((a_n, b_n))
    return out
