"""Exact one-variable Chebyshev machinery built on the unit H^2 = 2x*H - 1.

The unit's power coefficients H^n = A_n + H*B_n coincide with second-kind
Chebyshev polynomials: B_n = U_{n-1} and A_n = -U_{n-2} once U is extended
backward with U_{-1} = 0, U_{-2} = -1.  First-kind polynomials come from
T_n = A_n + x*B_n.  All identities here are checked in exact polynomial
arithmetic; numeric helpers exist only for the square-root branch x > 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import gcn
from .matrices import Mat2
from .poly import MultiPoly

__all__ = [
    "ChebCoeffPair",
    "ChebPoly",
    "X",
    "b_ode_residual",
    "cheb_AB",
    "cheb_T",
    "cheb_U",
    "cheb_companion_power",
    "cheb_unit",
    "ode_apply",
    "root_values",
    "t_value",
    "u_from_roots",
    "u_ode_residual",
    "u_value",
]

_XVARS = ("x",)
X = MultiPoly.variable("x", _XVARS)
_ONE = MultiPoly.one(_XVARS)
_ZERO = MultiPoly.zero(_XVARS)

_CHEB_UNIT = gcn.GcnUnit(MultiPoly.constant(_XVARS, -1), 2 * X)


@dataclass(frozen=True)
class ChebPoly:
    kind: str  # "first" or "second"
    n: int
    poly: MultiPoly


@dataclass(frozen=True)
class ChebCoeffPair:
    """The pair (A_n, B_n) with H^n = A_n + H*B_n."""

    n: int
    a: MultiPoly
    b: MultiPoly


def cheb_unit() -> gcn.GcnUnit:
    """The fixed unit (a, b) = (-1, 2x) over polynomials in x."""
    return _CHEB_UNIT


_U_CACHE: list[MultiPoly] = [_ONE, 2 * X]


def _u(n: int) -> MultiPoly:
    """U_n for n >= -2 (backward seeds U_{-1} = 0, U_{-2} = -1)."""
    if n == -1:
        return _ZERO
    if n == -2:
        return -_ONE
    if n < -2:
        raise ValueError(f"index {n} below the backward seeds")
    while len(_U_CACHE) <= n:
        _U_CACHE.append(2 * X * _U_CACHE[-1] - _U_CACHE[-2])
    return _U_CACHE[n]


def cheb_U(n: int) -> ChebPoly:
    """Second-kind Chebyshev polynomial U_n (U_0 = 1, U_1 = 2x)."""
    if n < 0:
        raise ValueError("index must be non-negative")
    return ChebPoly("second", n, _u(n))


_AB_CACHE: list[tuple[MultiPoly, MultiPoly]] = [(_ONE, _ZERO)]


def cheb_AB(n: int) -> ChebCoeffPair:
    """(A_n, B_n) by the companion-column recurrence of the unit (-1, 2x)."""
    if n < 0:
        raise ValueError("index must be non-negative")
    while len(_AB_CACHE) <= n:
        a_prev, b_prev = _AB_CACHE[-1]
        _AB_CACHE.append((-b_prev, a_prev + 2 * X * b_prev))
    a_n, b_n = _AB_CACHE[n]
    return ChebCoeffPair(n, a_n, b_n)


def cheb_T(n: int) -> ChebPoly:
    """First-kind Chebyshev polynomial T_n = A_n + x*B_n."""
    if n < 0:
        raise ValueError("index must be non-negative")
    pair = cheb_AB(n)
    return ChebPoly("first", n, pair.a + X * pair.b)


def cheb_companion_power(n: int) -> Mat2:
    """The (n+1)-th power of the companion matrix [[0, -1], [1, 2x]].

    Equals [[-U_{n-1}, -U_n], [U_n, U_{n+1}]] entry by entry; determinant 1
    gives the identity U_n^2 - U_{n-1} U_{n+1} = 1.
    """
    if n < 0:
        raise ValueError("index must be non-negative")
    return gcn.companion_power(_CHEB_UNIT, n + 1)


def ode_apply(poly: MultiPoly, constant) -> MultiPoly:
    """Apply (1 - x^2) d^2/dx^2 - 3x d/dx + constant to a polynomial in x."""
    d1 = poly.derivative("x")
    d2 = d1.derivative("x")
    return (1 - X * X) * d2 - 3 * X * d1 + poly * constant


def b_ode_residual(n: int) -> MultiPoly:
    """Residual of [(1 - x^2) d^2 - 3x d + (n^2 - 1)] B_n; zero for n >= 1.

    The annihilating constant is (n - 1)(n + 1): since B_n = U_{n-1}, the
    standard second-kind equation with index n - 1 applies.  The constant
    (n - 1)^2 does not annihilate B_2 = 2x (it leaves -4x) and is pinned as
    a non-identity in the tests.
    """
    if n < 1:
        raise ValueError("index must be at least 1")
    return ode_apply(cheb_AB(n).b, n * n - 1)


def u_ode_residual(n: int) -> MultiPoly:
    """Residual of [(1 - x^2) d^2 - 3x d + n(n + 2)] U_n; zero for n >= 0."""
    if n < 0:
        raise ValueError("index must be non-negative")
    return ode_apply(_u(n), n * (n + 2))


def u_value(n: int, x):
    """U_n evaluated by the value recurrence; exact for Fraction input."""
    if n < 0:
        raise ValueError("index must be non-negative")
    prev = x * 0 + 1
    if n == 0:
        return prev
    curr = 2 * x
    for _ in range(n - 1):
        prev, curr = curr, 2 * x * curr - prev
    return curr


def t_value(n: int, x):
    """T_n evaluated by the value recurrence; exact for Fraction input."""
    if n < 0:
        raise ValueError("index must be non-negative")
    prev = x * 0 + 1
    if n == 0:
        return prev
    curr = x
    for _ in range(n - 1):
        prev, curr = curr, 2 * x * curr - prev
    return curr


def root_values(x: float) -> tuple[float, float]:
    """Numeric roots H± = x ± sqrt(x^2 - 1) on the real branch x >= 1."""
    if x < 1.0:
        raise ValueError("real roots need x >= 1")
    s = math.sqrt(x * x - 1.0)
    return (x + s, x - s)


def u_from_roots(n: int, x: float) -> float:
    """U_n(x) = (H+^{n+1} - H-^{n+1}) / (2 sqrt(x^2 - 1)) for x > 1.

    Real-branch normalization of the root-difference form; equal to B_{n+1}.
    """
    if x <= 1.0:
        raise ValueError("the root-difference form needs x > 1")
    h_plus, h_minus = root_values(x)
    return (h_plus ** (n + 1) - h_minus ** (n + 1)) / (2.0 * math.sqrt(x * x - 1.0))
