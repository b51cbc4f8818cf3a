"""Quadrature engines for the integral representations.

Two rules cover everything the evaluators need:

* `integrate_adaptive`: Gauss-Legendre 16/32 pairs on a user-supplied
  partition of a real parameter interval, with bisection of panels whose
  embedded error estimate exceeds their share of the budget.  All live
  panels in a refinement round are evaluated in two vectorised calls,
  which keeps the per-point cost dominated by numpy rather than Python.

* `tanh_sinh`: double-exponential transformation for integrands with an
  algebraic endpoint singularity at 0, on (0, Q).  Node and weight
  formulas are written against overflow (the transform is evaluated via
  exp(-2|u|) forms, never cosh/sinh of large arguments).

Both return a `QuadResult` whose `err` field is an estimate of the
quadrature error and whose `mass` field is the total absolute mass
sum(|w * f|), used by callers to floor error estimates at a few ulps of
the mass (a difference-based estimate can collapse to zero on sudden
convergence while roundoff remains).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

_EPS = 2.0 ** -52


@dataclass(frozen=True)
class QuadResult:
    value: complex
    err: float
    mass: float
    evaluations: int
    converged: bool


@lru_cache(maxsize=None)
def gauss_legendre(n: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = np.polynomial.legendre.leggauss(n)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


_N_LO = 16
_N_HI = 32


def integrate_adaptive(f, breaks, tol: float, max_depth: int = 12) -> QuadResult:
    """Integrate f over [breaks[0], breaks[-1]] using the given partition.

    f maps a real ndarray of parameter values to a complex ndarray.  The
    per-panel error |I32 - I16| must fit the panel's length-proportional
    share of `tol`; failing panels are bisected up to `max_depth` times.
    Panels whose error is already at the roundoff floor of their own
    absolute mass are accepted regardless, since bisection cannot help.
    """
    breaks = np.asarray(breaks, dtype=float)
    if breaks.ndim != 1 or breaks.size < 2:
        raise ValueError("need at least two break points")
    if not np.all(np.diff(breaks) > 0):
        raise ValueError("break points must be strictly increasing")
    total_len = float(breaks[-1] - breaks[0])

    x_lo, w_lo = gauss_legendre(_N_LO)
    x_hi, w_hi = gauss_legendre(_N_HI)

    live = [(float(a), float(b), 0) for a, b in zip(breaks[:-1], breaks[1:])]
    value = 0.0 + 0.0j
    err = 0.0
    mass = 0.0
    evaluations = 0
    converged = True

    while live:
        mids = np.array([0.5 * (a + b) for a, b, _ in live])
        halfs = np.array([0.5 * (b - a) for a, b, _ in live])
        pts_lo = (mids[:, None] + halfs[:, None] * x_lo[None, :]).ravel()
        pts_hi = (mids[:, None] + halfs[:, None] * x_hi[None, :]).ravel()
        vals_lo = np.asarray(f(pts_lo), dtype=complex).reshape(len(live), _N_LO)
        vals_hi = np.asarray(f(pts_hi), dtype=complex).reshape(len(live), _N_HI)
        evaluations += pts_lo.size + pts_hi.size

        int_lo = halfs * (vals_lo @ w_lo)
        int_hi = halfs * (vals_hi @ w_hi)
        panel_mass = halfs * (np.abs(vals_hi) @ w_hi)
        panel_err = np.abs(int_hi - int_lo)

        next_live = []
        for i, (a, b, depth) in enumerate(live):
            share = tol * (b - a) / total_len
            at_floor = panel_err[i] <= 64.0 * _EPS * panel_mass[i]
            if panel_err[i] <= share or at_floor:
                value += int_hi[i]
                err += float(panel_err[i])
                mass += float(panel_mass[i])
            elif depth >= max_depth:
                value += int_hi[i]
                err += float(panel_err[i])
                mass += float(panel_mass[i])
                converged = False
            else:
                m = 0.5 * (a + b)
                next_live.append((a, m, depth + 1))
                next_live.append((m, b, depth + 1))
        live = next_live

    err += 16.0 * _EPS * mass
    return QuadResult(value=complex(value), err=err, mass=mass, evaluations=evaluations, converged=converged)


def tanh_sinh(
    f,
    upper: float,
    t_left: float,
    t_right: float,
    tol: float,
    max_level: int = 12,
) -> QuadResult:
    """Integrate f over (0, upper) with the tanh-sinh substitution.

    The map is q = upper * e^(2u) / (1 + e^(2u)) with u = (pi/2) sinh t,
    t running over [-t_left, t_right].  Callers pick the cutoffs from
    their integrand's endpoint exponent; 6.5 is a hard cap past which
    the double exponential underflows anyway.

    Levels double the node density until two successive levels agree to
    tol/2 or `max_level` is hit.  The reported error adds an ulp floor
    proportional to the absolute mass of the final level.
    """
    if not (upper > 0.0 and t_left > 0.0 and t_right > 0.0):
        raise ValueError("tanh_sinh needs positive upper limit and cutoffs")

    def nodes(h: float) -> tuple[np.ndarray, np.ndarray]:
        j = np.arange(math.floor(-t_left / h), math.ceil(t_right / h) + 1)
        t = j * h
        u = 0.5 * math.pi * np.sinh(t)
        eu = np.exp(-2.0 * np.abs(u))
        frac = np.where(u < 0, eu / (1.0 + eu), 1.0 / (1.0 + eu))
        q = upper * frac
        sech2 = 4.0 * eu / (1.0 + eu) ** 2
        w = (upper / 2.0) * sech2 * (0.5 * math.pi) * np.cosh(t) * h
        keep = (q > 0.0) & (q < upper)
        return q[keep], w[keep]

    prev = None
    value = 0.0 + 0.0j
    est = math.inf
    mass = 0.0
    evaluations = 0
    converged = False
    for level in range(3, max_level + 1):
        h = 2.0 ** (2 - level)
        q, w = nodes(h)
        fv = np.asarray(f(q), dtype=complex)
        evaluations += q.size
        value = complex(np.sum(w * fv))
        mass = float(np.sum(np.abs(w * fv)))
        if prev is not None:
            est = abs(value - prev)
            if est < 0.5 * tol:
                converged = True
                break
        prev = value

    err = est + 8.0 * _EPS * mass
    return QuadResult(value=value, err=err, mass=mass, evaluations=evaluations, converged=converged)


__all__ = ["QuadResult", "gauss_legendre", "integrate_adaptive", "tanh_sinh"]
