"""Trigonometric well quantum mechanics for the alpha = 0 subfamily.

An infinitely deep well on (-pi/2, pi/2) with potential
U(y) = (a+1/2)(a+1/2 - sin y)/cos^2 y (no additive constant) has
closed-form eigenfunctions psi_n = Phi * (degree-n polynomial in sin y)
and energies (a+n+1)^2.  A first-order reflection operator L1 squares
to the Hamiltonian; composing it with the parity flip exchanges the
well with its mirror image.  All derivatives here are analytic: the
residual checks measure the identities themselves, not a finite
difference scheme.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .operators import jacobi_sturm_liouville
from .polys import NEG_INFINITY, Poly, as_fraction, terminating_2f1

__all__ = [
    "DEFAULT_MARGIN",
    "ConjugationReport",
    "FactorizationReport",
    "L1Image",
    "PhiPoly",
    "SchrodingerParams",
    "WaveSample",
    "apply_H1",
    "apply_L1",
    "conjugation_check",
    "darboux_flip",
    "default_grid",
    "eigenstate",
    "energy",
    "factorization_check",
    "ground_state",
    "node_count",
    "potential",
    "sample_states",
    "superpotential",
    "superpotential_prime",
    "wavefunction",
]

HALF_PI = math.pi / 2.0
#: cos^(a+1/2) underflows and 1/cos blows up at the walls; grids stop short.
DEFAULT_MARGIN = 1e-3


def _check_a(a) -> float:
    value = float(a)
    if not value > 0.5:
        raise ValueError("well parameter a must exceed 1/2")
    return value


def _check_y(y) -> float:
    value = float(y)
    if not -HALF_PI < value < HALF_PI:
        raise ValueError("y must lie strictly inside (-pi/2, pi/2)")
    return value


@dataclass(frozen=True)
class SchrodingerParams:
    """Well parameter a > 1/2; the matching recurrence family sits at
    alpha = 0, beta = 2a + 1."""

    a: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", as_fraction(self.a))
        _check_a(self.a)

    @property
    def beta(self) -> Fraction:
        return 2 * self.a + 1


def potential(a, y) -> float:
    """U(y) = (a+1/2)(a+1/2 - sin y)/cos^2 y on |y| < pi/2."""
    a = _check_a(a)
    y = _check_y(y)
    c = math.cos(y)
    return (a + 0.5) * (a + 0.5 - math.sin(y)) / (c * c)


def energy(a, n: int) -> float:
    """(a + n + 1)^2.  Pure algebra, defined for any a; only the well
    picture itself (potential, states) insists on a > 1/2."""
    if n < 0:
        raise ValueError("level index must be nonnegative")
    return (float(a) + n + 1.0) ** 2


def ground_state(a, y) -> float:
    """Phi(y) = sqrt(1 + sin y) * cos^(a+1/2) y, the nodeless bottom state."""
    a = _check_a(a)
    y = _check_y(y)
    return math.sqrt(1.0 + math.sin(y)) * math.cos(y) ** (a + 0.5)


class PhiPoly:
    """Phi(y) * p(sin y) with closed-form first and second derivatives.

    With s = sin y, c = cos y and the log-derivative
    ell = Phi'/Phi = (1 - 2(a+1)s)/(2c), whose own derivative is
    ell' = (s - 2(a+1))/(2c^2):

        F'  = Phi * (ell p + c p')
        F'' = Phi * ((ell^2 + ell') p + 2 ell c p' - s p' + c^2 p'')
    """

    __slots__ = ("a", "poly", "_p", "_dp", "_ddp")

    def __init__(self, a, poly: Poly):
        self.a = _check_a(a)
        self.poly = poly
        dp = poly.derivative()
        self._p = tuple(float(c) for c in poly.coeffs)
        self._dp = tuple(float(c) for c in dp.coeffs)
        self._ddp = tuple(float(c) for c in dp.derivative().coeffs)

    def _pieces(self, y: float) -> tuple[float, float, float, float]:
        s = math.sin(y)
        c = math.cos(y)
        phi = math.sqrt(1.0 + s) * c ** (self.a + 0.5)
        return s, c, phi, (1.0 - 2.0 * (self.a + 1.0) * s) / (2.0 * c)

    def value(self, y) -> float:
        y = _check_y(y)
        s, _, phi, _ = self._pieces(y)
        return phi * _horner(self._p, s)

    def d1(self, y) -> float:
        y = _check_y(y)
        s, c, phi, ell = self._pieces(y)
        return phi * (ell * _horner(self._p, s) + c * _horner(self._dp, s))

    def d2(self, y) -> float:
        y = _check_y(y)
        s, c, phi, ell = self._pieces(y)
        ell_prime = (s - 2.0 * (self.a + 1.0)) / (2.0 * c * c)
        p0 = _horner(self._p, s)
        p1 = _horner(self._dp, s)
        p2 = _horner(self._ddp, s)
        return phi * (
            (ell * ell + ell_prime) * p0
            + (2.0 * ell * c - s) * p1
            + c * c * p2
        )


def _horner(coeffs: tuple[float, ...], s: float) -> float:
    out = 0.0
    for c in reversed(coeffs):
        out = out * s + c
    return out


def _state_poly(a, n: int) -> Poly:
    # 2F1(-n, n+2a+2; a+1; (1-s)/2) as an exact polynomial in s
    af = as_fraction(a)
    series = terminating_2f1(-n, n + 2 * af + 2, af + 1)
    return series.compose(Poly([Fraction(1, 2), Fraction(-1, 2)]))


def eigenstate(a, n: int) -> PhiPoly:
    """psi_n as a PhiPoly; the polynomial factor is exact in sin y."""
    _check_a(a)
    if n < 0:
        raise ValueError("level index must be nonnegative")
    return PhiPoly(a, _state_poly(a, n))


def wavefunction(a, n: int, y) -> float:
    return eigenstate(a, n).value(y)


def apply_L1(a, f, y) -> float:
    """(d/dy - (a+1/2)/cos y) applied to the parity flip of f:
    -f'(-y) - (a+1/2) f(-y)/cos y.  f must expose value() and d1()."""
    a = _check_a(a)
    y = _check_y(y)
    return -f.d1(-y) - (a + 0.5) * f.value(-y) / math.cos(y)


def apply_H1(a, f, y) -> float:
    """-f''(y) + U(y) f(y).  f must expose value() and d2()."""
    _check_a(a)
    y = _check_y(y)
    return -f.d2(y) + potential(a, y) * f.value(y)


class L1Image:
    """Lazy image of f under the square-root operator.

    Carries one derivative of the image so the operator can be applied
    twice: with k = a + 1/2 and v(y) = -f'(-y) - k f(-y)/cos y,

        v'(y) = f''(-y) + k f'(-y)/cos y - k f(-y) sin y / cos^2 y.
    """

    __slots__ = ("a", "f")

    def __init__(self, a, f):
        self.a = _check_a(a)
        self.f = f

    def value(self, y) -> float:
        return apply_L1(self.a, self.f, y)

    def d1(self, y) -> float:
        y = _check_y(y)
        k = self.a + 0.5
        c = math.cos(y)
        s = math.sin(y)
        return (
            self.f.d2(-y)
            + k * self.f.d1(-y) / c
            - k * self.f.value(-y) * s / (c * c)
        )


def superpotential(a, y) -> float:
    """chi(y) = -(a+1/2)/cos y; even, and H1 = (d+chi)(-d+chi) splits off it."""
    a = _check_a(a)
    y = _check_y(y)
    return -(a + 0.5) / math.cos(y)


def superpotential_prime(a, y) -> float:
    a = _check_a(a)
    y = _check_y(y)
    c = math.cos(y)
    return -(a + 0.5) * math.sin(y) / (c * c)


@dataclass(frozen=True)
class FactorizationReport:
    holds: bool
    tol: float
    worst: dict[str, float]

    def to_dict(self) -> dict:
        return {"holds": self.holds, "tol": self.tol, "worst": dict(self.worst)}


def factorization_check(
    chi: Callable[[float], float],
    chi_prime: Callable[[float], float],
    potential_fn: Callable[[float], float],
    constant: float,
    ys: Sequence[float],
    tol: float = 1e-10,
) -> FactorizationReport:
    """Check the four superpotential conditions at each sample:

        odd part:    2 chi'(y)  = U(y) - U(-y)
        even part:   2 chi(y)^2 = U(y) + U(-y) + 2C
        refactoring: chi^2 + chi' = U(y) + C
                     chi^2 - chi' = U(-y) + C

    Residuals are taken relative to the local magnitude of the terms
    involved, since U grows like 1/cos^2 toward the walls.
    """
    worst = {
        "odd_difference": 0.0,
        "even_sum": 0.0,
        "refactor_plus": 0.0,
        "refactor_minus": 0.0,
    }
    constant = float(constant)
    for y in ys:
        u_plus = potential_fn(y)
        u_minus = potential_fn(-y)
        x = chi(y)
        xp = chi_prime(y)
        scale = max(1.0, abs(u_plus), abs(u_minus), x * x, abs(constant))
        worst["odd_difference"] = max(
            worst["odd_difference"], abs(2.0 * xp - (u_plus - u_minus)) / scale
        )
        worst["even_sum"] = max(
            worst["even_sum"],
            abs(2.0 * x * x - (u_plus + u_minus + 2.0 * constant)) / scale,
        )
        worst["refactor_plus"] = max(
            worst["refactor_plus"], abs(x * x + xp - (u_plus + constant)) / scale
        )
        worst["refactor_minus"] = max(
            worst["refactor_minus"], abs(x * x - xp - (u_minus + constant)) / scale
        )
    holds = all(value <= tol for value in worst.values())
    return FactorizationReport(holds=holds, tol=tol, worst=worst)


def darboux_flip(a, n: int, y, tol: float = 1e-8) -> float:
    """Apply the parity flip after the square-root operator to psi_n.

    Asserts the result equals (-1)^(n+1) (a+n+1) psi_n(-y) to the given
    relative tolerance, then returns it.
    """
    a_float = _check_a(a)
    y = _check_y(y)
    state = eigenstate(a, n)
    flipped = apply_L1(a, state, -y)
    root = a_float + n + 1.0
    expected = (-1.0) ** (n + 1) * root * state.value(-y)
    scale = root * max(1.0, abs(state.value(-y)))
    if abs(flipped - expected) > tol * scale:
        raise ArithmeticError(
            f"parity-flipped image of level {n} missed its eigen-relation "
            f"by {abs(flipped - expected):.3e}"
        )
    return flipped


@dataclass(frozen=True)
class ConjugationReport:
    holds: bool
    tol: float
    worst: float

    def to_dict(self) -> dict:
        return {"holds": self.holds, "tol": self.tol, "worst": self.worst}


def conjugation_check(a, p: Poly, ys: Sequence[float], tol: float = 1e-8) -> ConjugationReport:
    """Verify H1(Phi p)(y) = Phi(y) q(sin y) with q = (a+1)^2 p - S p,
    where S is the exact Sturm-Liouville operator of the alpha = 0 family.

    The operator image q is computed in exact rational arithmetic, so the
    residual is purely floating evaluation noise.
    """
    af = as_fraction(a)
    _check_a(af)
    trunc = p.degree if p.degree != NEG_INFINITY else 0
    op = jacobi_sturm_liouville(af, trunc)
    q = (af + 1) ** 2 * p - op.apply(p)
    state = PhiPoly(a, p)
    image = PhiPoly(a, q)
    worst = 0.0
    for y in ys:
        lhs = apply_H1(a, state, y)
        rhs = image.value(y)
        worst = max(worst, abs(lhs - rhs) / max(1.0, abs(rhs)))
    return ConjugationReport(holds=worst <= tol, tol=tol, worst=worst)


def default_grid(points: int, margin: float = DEFAULT_MARGIN) -> tuple[float, ...]:
    """Uniform grid on [-pi/2 + margin, pi/2 - margin]."""
    if points < 2:
        raise ValueError("need at least two grid points")
    if not 0.0 < margin < HALF_PI:
        raise ValueError("margin must sit strictly between 0 and pi/2")
    lo = -HALF_PI + margin
    hi = HALF_PI - margin
    step = (hi - lo) / (points - 1)
    return tuple(lo + i * step for i in range(points))


def node_count(a, n: int, points: int = 400, margin: float = DEFAULT_MARGIN) -> int:
    """Sign changes of psi_n across the default grid; should equal n."""
    state = eigenstate(a, n)
    changes = 0
    previous = 0
    for y in default_grid(points, margin):
        value = state.value(y)
        sign = (value > 0.0) - (value < 0.0)
        if sign == 0:
            continue
        if previous != 0 and sign != previous:
            changes += 1
        previous = sign
    return changes


@dataclass(frozen=True)
class WaveSample:
    """Sampled state: grid strictly inside the well, all values finite."""

    grid: tuple[float, ...]
    values: tuple[float, ...]
    derivative_values: tuple[float, ...]

    def __post_init__(self):
        if len(self.grid) != len(self.values) or len(self.grid) != len(
            self.derivative_values
        ):
            raise ValueError("sample columns must have equal length")
        if any(b <= a for a, b in zip(self.grid, self.grid[1:])):
            raise ValueError("grid must be strictly increasing")
        for y in self.grid:
            _check_y(y)
        for column in (self.values, self.derivative_values):
            if any(not math.isfinite(v) for v in column):
                raise ValueError("sample values must be finite")


def sample_states(
    a, levels: int, points: int, margin: float = DEFAULT_MARGIN
) -> tuple[tuple[float, ...], list[WaveSample]]:
    """Grid plus one WaveSample per level 0..levels."""
    _check_a(a)
    if levels < 0:
        raise ValueError("levels must be nonnegative")
    grid = default_grid(points, margin)
    samples = []
    for n in range(levels + 1):
        state = eigenstate(a, n)
        samples.append(
            WaveSample(
                grid=grid,
                values=tuple(state.value(y) for y in grid),
                derivative_values=tuple(state.d1(y) for y in grid),
            )
        )
    return grid, samples
