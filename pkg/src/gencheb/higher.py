"""Third-order sector: the unit Y^3 = u*Y^2 - v*Y + 1 and its polynomials.

Powers of the cubic unit reduce to Y^n = alpha_n + beta_n*Y + gamma_n*Y^2
with the recurrence (obtained by multiplying by Y and reducing)

    alpha_{n+1} = gamma_n
    beta_{n+1}  = alpha_n - v*gamma_n
    gamma_{n+1} = beta_n + u*gamma_n

and gamma_n equals the two-variable Chebyshev polynomial of index n - 1.
The family U2_n(u, v) is produced by three independent exact routes that all
must agree:

* coefficient extraction from 1 / (1 - u*t + v*t^2 - t^3)
  (U2_{n+1} is the t^n coefficient; the seeds U2_0 = U2_{-1} = 0 are forced
  by that extraction),
* the recurrence U2_{n+2} = u*U2_{n+1} - v*U2_n + U2_{n-1},
* substitution (x, y, z) -> (u*s, -v*s, s) in the third-order Hermite
  polynomial H3_n followed by the term-wise Gamma integral
  (integral of s^m * exp(-s) over s >= 0 equals m!) and division by n!.

H3_n itself comes from the triple sum
    H3_n(x, y, z) = n! * sum_{p+2q+3r=n} x^p y^q z^r / (p! q! r!)
whose exponential generating function is exp(x*t + y*t^2 + z*t^3).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .matrices import Mat3
from .poly import MultiPoly, gens
from .series import TruncatedSeries

__all__ = [
    "CubicPowerCoeffs",
    "CubicUnit",
    "Hermite3",
    "TwoVarCheb",
    "cubic_power",
    "cubic_power_sequence",
    "hermite3",
    "hermite3_generating_series",
    "u2_by_laplace",
    "u2_by_recurrence",
    "u2_by_series",
    "u2_gens",
]

UV = ("u", "v")
XYZ = ("x", "y", "z")

U, V = gens(*UV)


def u2_gens() -> tuple[MultiPoly, MultiPoly]:
    """The generator polynomials (u, v) shared by this module's outputs."""
    return (U, V)


@dataclass(frozen=True)
class TwoVarCheb:
    n: int
    poly: MultiPoly


@dataclass(frozen=True)
class Hermite3:
    n: int
    poly: MultiPoly


@dataclass(frozen=True)
class CubicPowerCoeffs:
    n: int
    alpha: Any
    beta: Any
    gamma: Any


@dataclass(frozen=True)
class CubicUnit:
    """The relation Y^3 = u*Y^2 - v*Y + 1 over a fixed coefficient ring."""

    u: Any
    v: Any

    def ring_zero(self):
        return self.u * 0 + self.v * 0

    def ring_one(self):
        return self.ring_zero() + 1

    def companion(self) -> Mat3:
        """Matrix advancing the coefficient column (alpha, beta, gamma)."""
        zero = self.ring_zero()
        one = self.ring_one()
        return Mat3(
            (
                (zero, zero, one),
                (one, zero, -self.v),
                (zero, one, self.u),
            )
        )


def cubic_power_sequence(u, v, n_max: int) -> list[CubicPowerCoeffs]:
    """Coefficients of Y^0 .. Y^{n_max} by repeated reduction."""
    if n_max < 0:
        raise ValueError("power index must be non-negative")
    unit = CubicUnit(u, v)
    alpha, beta, gamma = unit.ring_one(), unit.ring_zero(), unit.ring_zero()
    out = [CubicPowerCoeffs(0, alpha, beta, gamma)]
    for n in range(1, n_max + 1):
        alpha, beta, gamma = gamma, alpha - v * gamma, beta + u * gamma
        out.append(CubicPowerCoeffs(n, alpha, beta, gamma))
    return out


def cubic_power(u, v, n: int, method: str = "reduction") -> CubicPowerCoeffs:
    """Coefficients (alpha_n, beta_n, gamma_n) of Y^n.

    ``reduction`` iterates the coefficient recurrence; ``matrix`` raises the
    3x3 companion matrix to the n-th power and reads its first column.
    """
    if n < 0:
        raise ValueError("power index must be non-negative")
    if method == "reduction":
        return cubic_power_sequence(u, v, n)[-1]
    if method == "matrix":
        power = CubicUnit(u, v).companion() ** n
        alpha, beta, gamma = power.column(0)
        return CubicPowerCoeffs(n, alpha, beta, gamma)
    raise ValueError(f"unknown method {method!r}; expected reduction or matrix")


def u2_by_series(n_max: int) -> list[TwoVarCheb]:
    """[U2_0, ..., U2_{n_max}] from the generating-series inverse."""
    if n_max < 1:
        raise ValueError("need n_max >= 1")
    denominator = TruncatedSeries(
        UV, [MultiPoly.one(UV), -U, V, -MultiPoly.one(UV)], max(n_max - 1, 3)
    )
    inverse = denominator.inverse()
    out = [TwoVarCheb(0, MultiPoly.zero(UV))]
    for k in range(1, n_max + 1):
        out.append(TwoVarCheb(k, inverse.coefficient(k - 1)))
    return out


def u2_by_recurrence(n_max: int) -> list[TwoVarCheb]:
    """[U2_0, ..., U2_{n_max}] from the third-order recurrence.

    Seeds U2_{-1} = U2_0 = 0, U2_1 = 1 (the first series values).
    """
    if n_max < 1:
        raise ValueError("need n_max >= 1")
    minus1 = MultiPoly.zero(UV)
    values = [MultiPoly.zero(UV), MultiPoly.one(UV)]
    while len(values) <= n_max:
        nxt = U * values[-1] - V * values[-2] + (values[-3] if len(values) >= 3 else minus1)
        values.append(nxt)
    return [TwoVarCheb(k, p) for k, p in enumerate(values[: n_max + 1])]


def hermite3(n: int) -> Hermite3:
    """Third-order Hermite polynomial by the exact triple sum."""
    if n < 0:
        raise ValueError("index must be non-negative")
    terms: dict[tuple[int, int, int], Fraction] = {}
    n_fact = math.factorial(n)
    for r in range(n // 3 + 1):
        for q in range((n - 3 * r) // 2 + 1):
            p = n - 2 * q - 3 * r
            terms[(p, q, r)] = Fraction(
                n_fact,
                math.factorial(p) * math.factorial(q) * math.factorial(r),
            )
    return Hermite3(n, MultiPoly(XYZ, terms))


def hermite3_generating_series(order: int) -> TruncatedSeries:
    """exp(x*t + y*t^2 + z*t^3) truncated at t^order, exactly."""
    if order < 3:
        raise ValueError("order must be at least 3")
    x, y, z = gens(*XYZ)
    argument = TruncatedSeries(XYZ, [MultiPoly.zero(XYZ), x, y, z], order)
    return argument.exp()


def u2_by_laplace(n: int) -> TwoVarCheb:
    """U2_{n+1} from the Hermite substitution and exact Gamma integrals.

    Substitute (x, y, z) -> (u*s, -v*s, s) in H3_n, integrate each s^m
    against exp(-s) to m!, and divide by n!.  No quadrature is involved;
    the result is an exact polynomial identity.
    """
    if n < 0:
        raise ValueError("index must be non-negative")
    uvs = ("u", "v", "s")
    u, v, s = gens(*uvs)
    substituted = hermite3(n).poly.substitute({"x": u * s, "y": -(v * s), "z": s})
    acc = MultiPoly.zero(UV)
    for (eu, ev, es), coeff in substituted.terms.items():
        acc = acc + MultiPoly(UV, {(eu, ev): coeff * math.factorial(es)})
    return TwoVarCheb(n + 1, acc * Fraction(1, math.factorial(n)))
