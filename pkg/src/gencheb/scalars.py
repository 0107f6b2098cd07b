"""Exact scalars: arbitrary-precision rationals and Gaussian rationals.

The rational carrier is :class:`fractions.Fraction` (re-exported as
``BigRational``): it is always reduced to lowest terms, keeps a positive
denominator, and has the canonical zero 0/1.  ``GaussianRational`` layers an
exact imaginary part on top and is the coefficient type used by the
polynomial and matrix layers; purely real values simply carry ``im = 0``.

Floats are deliberately rejected everywhere in this module.  Numeric
evaluation happens in the consumers, never in the exact core.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = ["BigRational", "GaussianRational", "as_fraction"]

BigRational = Fraction


def as_fraction(value: int | Fraction) -> Fraction:
    """Coerce an exact rational to ``Fraction``; anything inexact is an error."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


@dataclass(frozen=True, slots=True, eq=False)
class GaussianRational:
    """An exact complex number ``re + im*i`` with rational parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", as_fraction(self.re))
        object.__setattr__(self, "im", as_fraction(self.im))

    @staticmethod
    def _coerce(value: object) -> "GaussianRational | None":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return GaussianRational(Fraction(value))
        return None

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other: object) -> bool:
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return self.re == coerced.re and self.im == coerced.im

    def __hash__(self) -> int:
        # Real values hash like their Fraction so 1, Fraction(1) and
        # GaussianRational(1) agree as dict keys.
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __add__(self, other: object) -> "GaussianRational":
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return GaussianRational(self.re + coerced.re, self.im + coerced.im)

    __radd__ = __add__

    def __sub__(self, other: object) -> "GaussianRational":
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return GaussianRational(self.re - coerced.re, self.im - coerced.im)

    def __rsub__(self, other: object) -> "GaussianRational":
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return coerced - self

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other: object) -> "GaussianRational":
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return GaussianRational(
            self.re * coerced.re - self.im * coerced.im,
            self.re * coerced.im + self.im * coerced.re,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def squared_norm(self) -> Fraction:
        """``z * conj(z)`` as an exact rational (always real)."""
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        norm = self.squared_norm()
        if norm == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        conj = self.conjugate()
        return GaussianRational(conj.re / norm, conj.im / norm)

    def __truediv__(self, other: object) -> "GaussianRational":
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return self * coerced.inverse()

    def __rtruediv__(self, other: object) -> "GaussianRational":
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return coerced * self.inverse()

    def __pow__(self, exponent: int) -> "GaussianRational":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = GaussianRational(Fraction(1))
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __float__(self) -> float:
        if self.im != 0:
            raise ValueError(f"{self} has a nonzero imaginary part")
        return float(self.re)

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        imag = "i" if abs(self.im) == 1 else f"{abs(self.im)}i"
        sign = "-" if self.im < 0 else ("+" if self.re != 0 else "")
        if self.re == 0:
            return f"{sign}{imag}"
        return f"{self.re}{sign if sign else '+'}{imag}"

    def __repr__(self) -> str:
        return f"GaussianRational({self.re!r}, {self.im!r})"
