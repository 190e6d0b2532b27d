"""Zero counting and location on the critical strip.

Counting is done with a numerical argument principle: the winding number of an
analytic function along a rectangle boundary equals the number of enclosed
zeros, and is computed by continuous phase tracking with adaptive midpoint
insertion whenever a single step turns the phase by more than pi/2.

Critical-line zeros are located by recursive bisection of strip rectangles,
each subdivision certified by a winding count, followed by a golden-section
polish of |eta(1/2 + i y)| inside the isolating cell and a final certificate
on a rectangle of width 2*zero_tol centred on Re(s) = 1/2.

The boundary scan machinery for the Rouche-style check assembles
``f = F_omega * L`` (the shifted Fermi integral times a product of
conjugate-ratio factors of unit modulus, one per located zero) against
``g = lam * (eps + omega)``, samples the boundary of the truncated half-strip
rectangle K(tau), and reports the minimum triangle-inequality margin
|f| + |g| - |f + g| together with where it occurs.  Near each neutralized
zero i*beta_j the removable 0/0 factor is evaluated through the quotient
limit, with the derivative of F_omega estimated once per zero from a small
ring of quadrature values.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

from .errors import (
    BoundaryZero,
    BoundaryZeroError,
    DomainError,
    MultiplicityAmbiguity,
    NonConvergence,
    PoleProximity,
    ZeroAtCenter,
    ZeroOnBoundary,
)
from .quadrature import DEFAULT_BUDGET, f_shifted, m_star
from .special_functions import ensure_finite, eta

__all__ = [
    "RectangleRegion",
    "CriticalZeroList",
    "RoucheScanResult",
    "winding_count",
    "critical_line_zeros",
    "riemann_von_mangoldt",
    "jensen_check",
    "titchmarsh_zero_bound",
    "titchmarsh_zero_free",
    "blaschke_L",
    "rouche_scan",
    "lambda_choice",
    "triangle_equality_condition",
]

_HALF_PI = 0.5 * math.pi
_TWO_PI = 2.0 * math.pi
_TWO_PI_E = 2.0 * math.pi * math.e

AnalyticFn = Callable[[complex], complex]


@dataclass(frozen=True)
class RectangleRegion:
    """Axis-aligned rectangle in the complex plane."""

    re_min: float
    re_max: float
    im_min: float
    im_max: float

    def __post_init__(self):
        if not (self.re_min < self.re_max and self.im_min < self.im_max):
            raise DomainError(f"degenerate rectangle {self!r}")

    @property
    def corners(self) -> tuple[complex, complex, complex, complex]:
        return (
            complex(self.re_min, self.im_min),
            complex(self.re_max, self.im_min),
            complex(self.re_max, self.im_max),
            complex(self.re_min, self.im_max),
        )


@dataclass(frozen=True)
class CriticalZeroList:
    """Ordered imaginary parts of critical-line zeros up to height tau."""

    betas: tuple[float, ...]
    tau: float

    def __post_init__(self):
        if any(b <= 0.0 for b in self.betas):
            raise DomainError("zero heights must be positive")
        if any(b2 <= b1 for b1, b2 in zip(self.betas, self.betas[1:])):
            raise DomainError("zero heights must be strictly increasing")
        if any(b > self.tau for b in self.betas):
            raise DomainError("zero height above tau")

    def __iter__(self):
        return iter(self.betas)

    def __len__(self):
        return len(self.betas)


@dataclass(frozen=True)
class RoucheScanResult:
    """Minimum triangle-inequality margin over a sampled rectangle boundary."""

    tau: float
    lam: float
    epsilon: float
    min_margin: float
    argmin_omega: complex
    boundary_samples: int
    min_f_abs: float
    argmin_f_omega: complex
    zeros: tuple[float, ...]


class _EvalBudget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self, n: int = 1):
        self.used += n
        if self.used > self.limit:
            raise NonConvergence(
                f"boundary refinement budget {self.limit} exhausted"
            )


def _checked(fn: AnalyticFn, p: complex, min_mod: float, budget: _EvalBudget) -> complex:
    budget.spend()
    v = complex(fn(p))
    if abs(v) < min_mod:
        raise BoundaryZeroError(
            f"|fn({p})| = {abs(v):.3e} below boundary minimum {min_mod:.3e}"
        )
    return v


def _phase_delta(fn, p1, v1, p2, v2, min_mod, budget, depth=0) -> float:
    d = cmath.phase(v2 / v1)
    if abs(d) <= _HALF_PI:
        return d
    if depth >= 48:
        raise NonConvergence("phase step did not settle below pi/2")
    pm = 0.5 * (p1 + p2)
    vm = _checked(fn, pm, min_mod, budget)
    return _phase_delta(fn, p1, v1, pm, vm, min_mod, budget, depth + 1) + _phase_delta(
        fn, pm, vm, p2, v2, min_mod, budget, depth + 1
    )


def winding_count(
    fn: AnalyticFn,
    rect: RectangleRegion,
    samples_per_side: int | None = None,
    *,
    boundary_min_modulus: float = 1e-12,
    max_evals: int = 500_000,
) -> int:
    """Winding number of fn along the rectangle boundary (counterclockwise).

    For fn analytic without poles this equals the number of zeros inside.
    samples_per_side = None picks 64 samples per unit of side length (at
    least 8); adaptive refinement then guarantees phase continuity.
    """
    corners = rect.corners
    budget = _EvalBudget(max_evals)
    pts: list[complex] = []
    for a, b in zip(corners, corners[1:] + corners[:1]):
        n = samples_per_side
        if n is None:
            n = max(8, int(math.ceil(64.0 * abs(b - a))))
        for k in range(n):
            pts.append(a + (b - a) * (k / n))
    vals = [_checked(fn, p, boundary_min_modulus, budget) for p in pts]
    total = 0.0
    for k in range(len(pts)):
        k2 = (k + 1) % len(pts)
        total += _phase_delta(
            fn, pts[k], vals[k], pts[k2], vals[k2], boundary_min_modulus, budget
        )
    turns = total / _TWO_PI
    nearest = round(turns)
    if abs(turns - nearest) > 0.25:
        raise NonConvergence(f"phase tracking leaked: {turns} turns")
    return int(nearest)


def _eta_line_abs(y: float) -> float:
    return abs(eta(complex(0.5, y)))


def _safe_level(lo: float, hi: float) -> float:
    """A split height strictly inside (lo, hi) with |eta| clear of zero.

    The acceptance threshold scales with the cell height so that subdivision
    keeps working arbitrarily close to a zero; the nudge sequence is
    deterministic.
    """
    mid = 0.5 * (lo + hi)
    step = 0.093 * (hi - lo)
    thr = min(1e-3, 0.02 * (hi - lo))
    for j in range(12):
        y = mid + j * step
        if y < hi and _eta_line_abs(y) > thr:
            return y
    raise NonConvergence("could not find a zero-free split level")


def _golden_min(f: Callable[[float], float], lo: float, hi: float, iters: int = 80) -> float:
    """Golden-section minimiser for a unimodal |analytic| profile."""
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - inv_phi * (b - a)
    d = a + inv_phi * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(iters):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - inv_phi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + inv_phi * (b - a)
            fd = f(d)
        if b - a < 1e-12:
            break
    return 0.5 * (a + b)


def critical_line_zeros(
    tau: float,
    zero_tol: float = 1e-4,
    *,
    re_half_width: float = 0.4,
    boundary_min_modulus: float = 1e-12,
    max_evals: int = 2_000_000,
) -> CriticalZeroList:
    """Locate all eta zeros with 0 < Im(s) <= tau by rectangle bisection.

    Each isolating cell is certified by a winding count of 1, the height is
    refined below zero_tol, the zero ordinate is polished by golden-section
    on |eta| along the critical line, and a final certificate confirms the
    zero sits inside a rectangle of half-width zero_tol around Re(s) = 1/2.
    """
    if tau <= 0.0:
        raise DomainError("tau must be positive")
    if zero_tol <= 0.0:
        raise DomainError("zero_tol must be positive")
    re_lo, re_hi = 0.5 - re_half_width, 0.5 + re_half_width
    fn = lambda s: eta(s)

    def cell_count(lo: float, hi: float) -> int:
        rect = RectangleRegion(re_lo, re_hi, lo, hi)
        return winding_count(
            fn, rect, boundary_min_modulus=boundary_min_modulus, max_evals=max_evals
        )

    betas: list[float] = []
    stack = [(0.0, float(tau))]
    min_height = max(zero_tol / 8.0, 1e-9)
    while stack:
        lo, hi = stack.pop()
        count = cell_count(lo, hi)
        if count == 0:
            continue
        if count == 1 and hi - lo <= zero_tol:
            beta = _golden_min(_eta_line_abs, lo, hi)
            betas.append(beta)
            continue
        if hi - lo <= min_height:
            raise MultiplicityAmbiguity(
                f"cell [{lo}, {hi}] reports {count} zeros at minimum height"
            )
        mid = _safe_level(lo, hi)
        stack.append((lo, mid))
        stack.append((mid, hi))

    betas.sort()
    for beta in betas:
        cert = RectangleRegion(
            0.5 - zero_tol, 0.5 + zero_tol, beta - zero_tol, beta + zero_tol
        )
        n = winding_count(fn, cert, boundary_min_modulus=boundary_min_modulus)
        if n != 1:
            raise MultiplicityAmbiguity(
                f"certificate cell at beta = {beta} holds {n} zeros"
            )
    return CriticalZeroList(tuple(betas), float(tau))


def riemann_von_mangoldt(T: float) -> float:
    """Zero-count estimate (T/2pi) log(T/(2 pi e)) + 7/8 for T >= 2 pi e.

    The oscillating argument term and the O(1/T) remainder are dropped; the
    estimate is accurate to well under 1.5 at the heights used here.
    """
    if T < _TWO_PI_E:
        raise DomainError(f"T = {T} below 2*pi*e = {_TWO_PI_E:.6f}")
    return (T / _TWO_PI) * math.log(T / _TWO_PI_E) + 7.0 / 8.0


def jensen_check(
    fn: AnalyticFn,
    zeros: Sequence[complex],
    R: float,
    samples: int = 512,
    *,
    center_tol: float = 1e-12,
    boundary_tol: float = 1e-9,
) -> tuple[float, float]:
    """Both sides of the disk zero-count identity for fn on |z| <= R.

    lhs = log|fn(0)| + sum log(R/|z_i|) over the provided interior zeros;
    rhs = circle average of log|fn| (trapezoid over equispaced angles, which
    converges geometrically for analytic fn with no zeros on the circle).
    """
    if R <= 0.0:
        raise DomainError("R must be positive")
    if samples < 8:
        raise DomainError("samples must be >= 8")
    f0 = complex(fn(0.0 + 0.0j))
    if abs(f0) < center_tol:
        raise ZeroAtCenter(f"|fn(0)| = {abs(f0):.3e} below {center_tol:.1e}")
    lhs = math.log(abs(f0))
    for z in zeros:
        z = ensure_finite(z)
        if abs(abs(z) - R) < boundary_tol:
            raise BoundaryZero(f"zero {z} lies on the circle |z| = {R}")
        if abs(z) > R:
            raise DomainError(f"zero {z} outside the disk of radius {R}")
        lhs += math.log(R / abs(z))
    acc = 0.0
    for k in range(samples):
        zk = R * cmath.exp(2j * math.pi * k / samples)
        acc += math.log(abs(complex(fn(zk))))
    return lhs, acc / samples


def titchmarsh_zero_bound(M: float, f0_abs: float, delta: float) -> float:
    """Upper bound log(M/|f(0)|) / log(1/delta) on zeros in the delta-subdisk."""
    if not 0.0 < delta < 1.0:
        raise DomainError(f"delta = {delta} outside (0,1)")
    if not 0.0 < f0_abs <= M:
        raise DomainError(f"need 0 < |f(0)| <= M, got |f(0)| = {f0_abs}, M = {M}")
    return math.log(M / f0_abs) / math.log(1.0 / delta)


def titchmarsh_zero_free(M: float, f0_abs: float, delta: float) -> bool:
    """True iff delta*M < |f(0)|, which forces the bound below 1 (no zeros)."""
    if not 0.0 < delta < 1.0:
        raise DomainError(f"delta = {delta} outside (0,1)")
    if not 0.0 < f0_abs <= M:
        raise DomainError(f"need 0 < |f(0)| <= M, got |f(0)| = {f0_abs}, M = {M}")
    return delta * M < f0_abs


def blaschke_L(omega, zeros, *, pole_tol: float = 1e-3) -> complex:
    """Product of conjugate-ratio factors (conj(omega)+i b_j)/(omega-i b_j).

    Numerator and denominator of each factor are complex conjugates (the
    heights b_j are real), so the product has modulus exactly 1 away from
    the poles at i*b_j.
    """
    omega = ensure_finite(omega)
    betas = np.asarray(list(zeros), dtype=float)
    if betas.size == 0:
        return 1.0 + 0.0j
    den = omega - 1j * betas
    gap = float(np.min(np.abs(den)))
    if gap < pole_tol:
        raise PoleProximity(
            f"omega within {gap:.3e} of a zero height (pole_tol {pole_tol:.1e})"
        )
    return complex(np.prod((np.conj(omega) + 1j * betas) / den))


@lru_cache(maxsize=None)
def _m_star_half() -> float:
    return m_star(0.5, 1e-10)


def lambda_choice(theta_abs: float, epsilon: float, nu: float) -> float:
    """Scale factor (M*(1/2) + nu) / (theta_abs * epsilon) for the boundary scan.

    Exceeds M*(1/2) / (theta_abs * r) for every boundary point with
    r = |eps + omega| >= eps, since nu > 0.
    """
    if theta_abs <= 0.0 or epsilon <= 0.0 or nu <= 0.0:
        raise DomainError("theta_abs, epsilon and nu must all be positive")
    return (_m_star_half() + nu) / (theta_abs * epsilon)


def triangle_equality_condition(w, v, tol: float = 1e-12) -> bool:
    """True iff |w| + |v| - |w + v| < tol (near-equality in the triangle bound)."""
    w = ensure_finite(w)
    v = ensure_finite(v)
    return abs(w) + abs(v) - abs(w + v) < tol


def _f_omega_estimate(omega: complex, quad_tol: float, budget: int):
    """F_omega with a second, tighter pass when the value drowns in the error."""
    est = f_shifted(omega, quad_tol, budget=budget)
    if abs(est.value) < 50.0 * est.abs_error:
        tighter = max(1e-13, est.abs_error / 1e4)
        if tighter < quad_tol:
            est = f_shifted(omega, tighter, budget=budget)
    return est


def rouche_scan(
    tau: float,
    lam: float,
    epsilon: float,
    samples_per_side: int | None = None,
    tol: float = 1e-10,
    *,
    zeros: CriticalZeroList | Sequence[float] | None = None,
    zero_tol: float = 1e-4,
    quad_tol: float = 1e-10,
    pole_tol: float = 1e-3,
    exclusion_tol: float = 1e-2,
    boundary_min_modulus: float = 1e-12,
    density: int = 64,
    budget: int = DEFAULT_BUDGET,
) -> RoucheScanResult:
    """Sample |f| + |g| - |f+g| over the boundary of K(tau).

    K(tau) is the rectangle Re(omega) in [0, 1/2], Im(omega) in [0, tau];
    f = F_omega * L with L built over the critical-line zeros below tau, and
    g = lam * (epsilon + omega).  If a zero height falls within exclusion_tol
    of tau, tau is shifted up by 5*exclusion_tol (repeatedly if needed) so the
    top edge stays clear.  Samples within pole_tol of a neutralized zero are
    evaluated through the quotient limit; elsewhere |f| must stay above
    boundary_min_modulus or ZeroOnBoundary is raised.

    Two facts constrain boundary_min_modulus.  |F_omega| on the left edge
    decays like e^(-pi Im/2) (the gamma-modulus factor), so an absolute floor
    only makes sense for moderate tau - the 1e-12 default suits tau up to
    ~18; raise quad accuracy and lower the floor together beyond that.  And
    the right edge carries genuine zeros of F_omega at Im = 2 pi k / log 2
    (the alternating-series prefactor 1 - 2^(1-s) vanishes there, at
    Re(s) = 1), which no neutralizer covers; samples land on them only with
    measure zero, and the scan reports whatever minimum it sees.
    """
    if tau <= 0.0 or lam <= 0.0 or epsilon <= 0.0:
        raise DomainError("tau, lam and epsilon must be positive")
    if zeros is None:
        zlist = critical_line_zeros(tau + 6.0 * exclusion_tol, zero_tol)
        betas = list(zlist.betas)
    else:
        betas = [float(b) for b in zeros]
    while any(abs(b - tau) < exclusion_tol for b in betas):
        tau += 5.0 * exclusion_tol
    betas = [b for b in betas if b <= tau]
    beta_arr = np.asarray(betas, dtype=float)

    # Quotient limits F_omega(omega)/(omega - i b_j) near each zero, estimated
    # once per zero from the symmetric pair of ring points of radius pole_tol
    # that stay inside the half strip (the pair cancels the second-order term,
    # giving a central difference along the edge).
    quotients = []
    for b in betas:
        up = _f_omega_estimate(1j * (b + pole_tol), quad_tol, budget).value
        dn = _f_omega_estimate(1j * (b - pole_tol), quad_tol, budget).value
        quotients.append((up - dn) / (2j * pole_tol))

    def f_at(omega: complex) -> tuple[complex, bool]:
        """Returns (f(omega), near_neutralized_zero).

        The quotient-limit route applies within pole_tol of a zero height;
        the nonvanishing check is waived on a 10x wider neighbourhood, where
        |f| legitimately decays linearly toward the neutralized zero.
        """
        near = False
        if beta_arr.size:
            d = omega - 1j * beta_arr
            j = int(np.argmin(np.abs(d)))
            near = abs(d[j]) < 10.0 * pole_tol
            if abs(d[j]) < pole_tol:
                rest = np.delete(beta_arr, j)
                other = blaschke_L(omega, rest, pole_tol=pole_tol) if rest.size else 1.0
                return d[j].conjugate() * quotients[j] * other, True
        value = _f_omega_estimate(omega, quad_tol, budget).value
        return value * blaschke_L(omega, betas, pole_tol=pole_tol), near

    corners = [
        0.0 + 0.0j,
        0.5 + 0.0j,
        complex(0.5, tau),
        complex(0.0, tau),
    ]
    samples: list[complex] = []
    for a, b in zip(corners, corners[1:] + corners[:1]):
        n = samples_per_side
        if n is None:
            n = max(8, int(math.ceil(density * abs(b - a))))
        for k in range(n):
            samples.append(a + (b - a) * (k / n))

    min_margin = math.inf
    argmin_omega = samples[0]
    min_f_abs = math.inf
    argmin_f = samples[0]
    for omega in samples:
        fv, near_zero = f_at(omega)
        gv = lam * (epsilon + omega)
        margin = abs(fv) + abs(gv) - abs(fv + gv)
        if margin < min_margin:
            min_margin = margin
            argmin_omega = omega
        if not near_zero:
            if abs(fv) < boundary_min_modulus:
                raise ZeroOnBoundary(
                    f"|f({omega})| = {abs(fv):.3e} below {boundary_min_modulus:.1e}"
                )
            if abs(fv) < min_f_abs:
                min_f_abs = abs(fv)
                argmin_f = omega
    if min_margin < -tol:
        raise NonConvergence(
            f"triangle margin {min_margin:.3e} below -tol; numerical breakdown"
        )
    return RoucheScanResult(
        tau=float(tau),
        lam=float(lam),
        epsilon=float(epsilon),
        min_margin=float(min_margin),
        argmin_omega=argmin_omega,
        boundary_samples=len(samples),
        min_f_abs=float(min_f_abs),
        argmin_f_omega=argmin_f,
        zeros=tuple(betas),
    )
