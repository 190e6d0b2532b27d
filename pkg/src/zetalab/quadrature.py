"""Adaptive quadrature for the Fermi-Dirac Mellin integral and its bounds.

The central object is ``F(s) = integral_0^inf x**(s-1)/(e**x + 1) dx`` on the
critical strip (the Mellin transform of the Fermi function), together with

* ``M(alpha)  = 1/(2 alpha) + 1/e``           -- closed-form modulus bound,
* ``M*(alpha) = F(alpha)`` for real alpha     -- the sharper integral bound,
* its first two derivatives (log-weighted integrands), and
* ``G(b) = M*(omega0(b) + 1/2)`` with ``omega0(b) = 1/4 - arctan(b)/pi``,
  the real slice of the disk-composed integral used by the map module.

Scheme: the integrand is singular like x**(alpha-1) at 0 and decays like
e**(-x).  The integral is split three ways:

* head [0, h]: bounded analytically using |1/(e**x+1)| <= 1/2 and the exact
  incomplete-gamma form of integral x**(alpha-1) |log x|**k dx; h is chosen so
  the head is below tol/10 and its bound is added to the reported error;
* body [h, X]: geometric panels (ratio capped so that the oscillation of
  x**(i Im s) = e**(i Im s log x) is a few radians per panel), each integrated
  with a 15-point Gauss-Kronrod rule and refined adaptively, worst panels
  first, until the summed |K15-G7| estimate meets the tolerance;
* tail [X, inf): discarded, with X = max(40, -log(tol/10)) so that the
  e**(-x) majorant keeps it below tol/10 (log-weighted variants enlarge X).

All evaluations are vectorised over panels; the evaluation budget is enforced
across the whole call and exceeding it raises ToleranceNotMet.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ToleranceNotMet
from .special_functions import ensure_finite

__all__ = [
    "DEFAULT_BUDGET",
    "QuadratureEstimate",
    "BoundsSample",
    "fermi_mellin",
    "f_shifted",
    "m_bound",
    "m_star",
    "m_star_derivative",
    "omega0",
    "omega0_prime",
    "g_of_b",
]

DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class QuadratureEstimate:
    """Integral value with an absolute-error estimate and evaluation count."""

    value: complex
    abs_error: float
    n_evals: int


@dataclass(frozen=True)
class BoundsSample:
    """One row of the bounds table at a given alpha."""

    alpha: float
    m: float
    m_star: float
    m_star_d1: float
    m_star_d2: float


# 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule.
_GK_X = np.array(
    [
        -0.991455371120812639206854697526329,
        -0.949107912342758524526189684047851,
        -0.864864423359769072789712788640926,
        -0.741531185599394439863864773280788,
        -0.586087235467691130294144838258730,
        -0.405845151377397166906606412076961,
        -0.207784955007898467600689403773245,
        0.0,
        0.207784955007898467600689403773245,
        0.405845151377397166906606412076961,
        0.586087235467691130294144838258730,
        0.741531185599394439863864773280788,
        0.864864423359769072789712788640926,
        0.949107912342758524526189684047851,
        0.991455371120812639206854697526329,
    ]
)
_GK_WK = np.array(
    [
        0.022935322010529224963732008058970,
        0.063092092629978553290700663189204,
        0.104790010322250183839876322541518,
        0.140653259715525918745189590510238,
        0.169004726639267902826583426598550,
        0.190350578064785409913256402421014,
        0.204432940075298892414161999234649,
        0.209482141084727828012999174891714,
        0.204432940075298892414161999234649,
        0.190350578064785409913256402421014,
        0.169004726639267902826583426598550,
        0.140653259715525918745189590510238,
        0.104790010322250183839876322541518,
        0.063092092629978553290700663189204,
        0.022935322010529224963732008058970,
    ]
)
_G_W = np.array(
    [
        0.129484966168869693270611432679082,
        0.279705391489276667901467771423780,
        0.381830050505118944950369775488975,
        0.417959183673469387755102040816327,
        0.381830050505118944950369775488975,
        0.279705391489276667901467771423780,
        0.129484966168869693270611432679082,
    ]
)


def _gk_batch(f, a: np.ndarray, b: np.ndarray):
    """GK15 on a batch of panels; returns (values, error estimates, n_evals)."""
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    x = mid[:, None] + half[:, None] * _GK_X[None, :]
    y = f(x.ravel()).reshape(x.shape)
    k15 = (y * _GK_WK).sum(axis=1) * half
    g7 = (y[:, 1::2] * _G_W).sum(axis=1) * half
    return k15, np.abs(k15 - g7), x.size


def _integrate(f, mesh: np.ndarray, tol: float, budget: int):
    """Globally adaptive GK15 over an initial mesh.

    Splits every panel whose error exceeds its fair share each sweep; stops
    when the summed estimate is below tol or the rounding floor, whichever is
    larger.  Raises ToleranceNotMet when the budget runs out first.
    """
    a = mesh[:-1].astype(float)
    b = mesh[1:].astype(float)
    if len(a) * len(_GK_X) > budget:
        raise ToleranceNotMet(
            f"budget {budget} below the {len(a) * len(_GK_X)} evaluations of the initial mesh"
        )
    vals, errs, n_evals = _gk_batch(f, a, b)
    while True:
        total_err = errs.sum()
        floor = 64.0 * np.finfo(float).eps * max(1.0, np.abs(vals).sum())
        if total_err <= max(tol, floor):
            return vals.sum(), float(total_err), n_evals
        if n_evals >= budget:
            raise ToleranceNotMet(
                f"quadrature budget {budget} exhausted (error {total_err:.3e} > tol {tol:.3e})",
                value=vals.sum(),
                abs_error=float(total_err),
                n_evals=n_evals,
            )
        thresh = tol / (2.0 * len(a))
        idx = np.flatnonzero(errs > thresh)
        if idx.size == 0:
            idx = np.array([int(np.argmax(errs))])
        mid = 0.5 * (a[idx] + b[idx])
        new_a = np.concatenate([a[idx], mid])
        new_b = np.concatenate([mid, b[idx]])
        keep = np.ones(len(a), dtype=bool)
        keep[idx] = False
        new_vals, new_errs, n = _gk_batch(f, new_a, new_b)
        a = np.concatenate([a[keep], new_a])
        b = np.concatenate([b[keep], new_b])
        vals = np.concatenate([vals[keep], new_vals])
        errs = np.concatenate([errs[keep], new_errs])
        n_evals += n


def _head_bound(alpha: float, k: int, t: float) -> float:
    """Bound on integral_0^h x**(alpha-1) |log x|**k / (e**x+1) dx, t = alpha*log(1/h).

    Uses |1/(e**x+1)| <= 1/2 and the exact Gamma(k+1, t) for k = 0, 1, 2.
    """
    if k == 0:
        inc = math.exp(-t)
    elif k == 1:
        inc = math.exp(-t) * (1.0 + t)
    else:
        inc = math.exp(-t) * (2.0 + 2.0 * t + t * t)
    return inc / (2.0 * alpha ** (k + 1))


def _head_cut(alpha: float, k: int, tol: float):
    """Pick h (as alpha*log(1/h)) so the head bound is <= tol/10, h >= 1e-300."""
    t = max(2.0 * (k + 1), 1.0)
    t_cap = 300.0 * math.log(10.0) * alpha
    while _head_bound(alpha, k, t) > tol / 10.0 and t < t_cap:
        t = min(t * 1.5, t_cap)
    h = math.exp(-t / alpha)
    return h, _head_bound(alpha, k, t)


def _tail_cut(k: int, tol: float):
    """Pick X so integral_X^inf x**(alpha-1) log(x)**k e**(-x) dx <= tol/10."""
    x = max(40.0, -math.log(tol / 10.0))
    while 2.0 * max(1.0, math.log(x)) ** k * math.exp(-x) > tol / 10.0:
        x *= 1.25
    return x, 2.0 * max(1.0, math.log(x)) ** k * math.exp(-x)


def _mesh(h: float, x_max: float, beta: float) -> np.ndarray:
    """Geometric mesh from h to x_max, a few radians of x**(i beta) per panel."""
    ratio = min(4.0, math.exp(3.0 / max(1.0, abs(beta))))
    pts = [h]
    while pts[-1] < 1.0:
        pts.append(min(1.0, pts[-1] * ratio))
    while pts[-1] < x_max:
        pts.append(min(x_max, pts[-1] * ratio))
    return np.array(pts)


def fermi_mellin(s, tol: float = 1e-8, *, budget: int = DEFAULT_BUDGET) -> QuadratureEstimate:
    """F(s) = integral_0^inf x**(s-1)/(e**x+1) dx for 0 < Re(s) <= 1.

    The closed right edge Re(s) = 1 is admitted (F(1) = log 2); the rest of
    the strip boundary is not.  abs_error includes the discarded head and
    tail bounds on top of the adaptive rule's own estimate.
    """
    s = ensure_finite(s)
    if not 0.0 < s.real <= 1.0:
        raise DomainError(f"Re(s) = {s.real} outside (0, 1]")
    if tol <= 0.0:
        raise DomainError("tol must be positive")
    alpha, beta = s.real, s.imag
    h, head = _head_cut(alpha, 0, tol)
    x_max, tail = _tail_cut(0, tol)
    exponent = s - 1.0

    if beta == 0.0:
        def integrand(x):
            return x ** (alpha - 1.0) / (np.exp(x) + 1.0)
    else:
        def integrand(x):
            return np.exp(exponent * np.log(x)) / (np.exp(x) + 1.0)

    value, err, n_evals = _integrate(integrand, _mesh(h, x_max, beta), 0.8 * tol, budget)
    return QuadratureEstimate(complex(value), err + head + tail, n_evals)


def f_shifted(omega, tol: float = 1e-8, *, budget: int = DEFAULT_BUDGET) -> QuadratureEstimate:
    """Shifted integral F_omega(omega) = F(omega + 1/2), Re(omega) in [0, 1/2].

    Identical to fermi_mellin after the change of variable s = omega + 1/2;
    the half-strip domain maps onto the closed upper half of the strip.
    """
    omega = ensure_finite(omega)
    if not 0.0 <= omega.real <= 0.5:
        raise DomainError(f"Re(omega) = {omega.real} outside [0, 1/2]")
    return fermi_mellin(omega + 0.5, tol, budget=budget)


def m_bound(alpha: float) -> float:
    """Closed-form bound M(alpha) = 1/(2 alpha) + 1/e on |F|, alpha in (0, 1]."""
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"alpha = {alpha} outside (0, 1]")
    return 1.0 / (2.0 * alpha) + math.exp(-1.0)


def m_star(alpha: float, tol: float = 1e-8, *, budget: int = DEFAULT_BUDGET) -> float:
    """Integral bound M*(alpha) = F(alpha) for real alpha in (0, 1]."""
    est = fermi_mellin(alpha, tol, budget=budget)
    assert abs(est.value.imag) < tol, "real integrand produced an imaginary part"
    return est.value.real


def m_star_derivative(
    alpha: float, order: int, tol: float = 1e-8, *, budget: int = DEFAULT_BUDGET
) -> float:
    """d^k M*/d alpha^k as the log-weighted integral, k = order in {1, 2}.

    Negative for order 1 and positive for order 2 on [1/2, 1]; the evaluation
    itself is valid on all of (0, 1].
    """
    if order not in (1, 2):
        raise DomainError("order must be 1 or 2")
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"alpha = {alpha} outside (0, 1]")
    if tol <= 0.0:
        raise DomainError("tol must be positive")
    h, head = _head_cut(alpha, order, tol)
    x_max, tail = _tail_cut(order, tol)

    def integrand(x):
        return x ** (alpha - 1.0) * np.log(x) ** order / (np.exp(x) + 1.0)

    value, err, _ = _integrate(integrand, _mesh(h, x_max, 0.0), 0.8 * tol, budget)
    return float(value.real if np.iscomplexobj(value) else value)


def omega0(b: float) -> float:
    """Real strip coordinate of the disk centre: 1/4 - arctan(b)/pi.

    Equals 1/4 + Arg[(1-bi)/(1+bi)]/(2 pi); the arctangent closed form is
    used because Arg[(1-bi)/(1+bi)] = -2 arctan(b) for b in (0, 1).
    """
    if not 0.0 < b < 1.0:
        raise DomainError(f"b = {b} outside (0, 1)")
    return 0.25 - math.atan(b) / math.pi


def omega0_prime(b: float) -> float:
    """Elementary derivative of omega0: -1/(pi (1 + b^2))."""
    if not 0.0 < b < 1.0:
        raise DomainError(f"b = {b} outside (0, 1)")
    return -1.0 / (math.pi * (1.0 + b * b))


def g_of_b(b: float, tol: float = 1e-8, *, budget: int = DEFAULT_BUDGET) -> float:
    """G(b) = M*(omega0(b) + 1/2), strictly increasing on (0, 1).

    Increases toward M*(1/2) as b -> 1 because omega0 decreases to 0 and M*
    is strictly decreasing.
    """
    return m_star(omega0(b) + 0.5, tol, budget=budget)
