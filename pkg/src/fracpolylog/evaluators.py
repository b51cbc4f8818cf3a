"""Evaluation backends for Li_alpha and the dispatch policy tying them together.

Five independent representations, each with its own region of validity:

* `eval_series`: the defining power series, |z| < 1.
* `eval_appell`: the real-axis integral z/(e^q - z) weighted by q^(alpha-1),
  Re alpha > 0, z off the cut [1, inf); the only backend that reaches z = 1
  (for Re alpha > 1, where it produces zeta(alpha)).
* `eval_hankel`: the loop-contour version of the same integral, valid for
  every non-integer alpha and z off the cut.
* `eval_mittag_leffler`: the bilateral sum of branch terms M_alpha[k],
  Re alpha < 0.
* `eval_zeta_series`: the expansion of Li_alpha(e^w) in powers of w with
  zeta-value coefficients, Re alpha < 0, Re w < 0, |w| < 2 pi.

plus the rational closed forms at nonpositive integer order.  Every backend
returns an `EvalResult` whose err_estimate bounds the truncation error of
the returned value; estimates are computed from a priori tail bounds plus
measured quadrature differences, never tuned to match a comparison value.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .domain import EPS_CUT, EvalResult, log_pos_cut
from .errors import ConvergenceError, DomainError, UnsupportedError
from .kernel import (
    EPS_INT,
    TWO_PI,
    Order,
    c_alpha,
    gamma,
    principal_log,
    principal_pow,
    riemann_zeta,
)
from .kernel import ZETA_MAX_ABS
from .quadrature import integrate_adaptive, tanh_sinh

_EPS = 2.0 ** -52


@dataclass(frozen=True)
class ToleranceConfig:
    """Accuracy and effort knobs shared by all backends.

    target_abs_err is the absolute error each backend aims for; the
    reported err_estimate may exceed it when a hard bound says so.
    """

    target_abs_err: float = 1e-10
    max_series_terms: int = 10_000_000
    quad_max_depth: int = 12
    hankel_angle: float = math.pi / 4.0
    hankel_radius_cap: float = 1.0
    ml_direct_terms: int = 64
    cut_offset: float = 1e-7

    def __post_init__(self) -> None:
        for name in (
            "target_abs_err",
            "max_series_terms",
            "quad_max_depth",
            "hankel_angle",
            "hankel_radius_cap",
            "ml_direct_terms",
            "cut_offset",
        ):
            if not (getattr(self, name) > 0):
                raise ValueError(f"{name} must be positive")
        if not (self.hankel_angle < 0.5 * math.pi):
            raise ValueError("hankel_angle must lie in (0, pi/2)")


DEFAULT_CONFIG = ToleranceConfig()


def _near_cut(z: complex) -> bool:
    return abs(z.imag) <= EPS_CUT and z.real >= 1.0 - EPS_CUT


def _check_branch_points(z: complex) -> None:
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError("z must be finite")
    if abs(z) <= EPS_CUT:
        raise DomainError("evaluation at the branch point 0 is undefined")
    if abs(z - 1.0) <= EPS_CUT:
        raise DomainError("evaluation at the branch point 1 is undefined")


# ---------------------------------------------------------------------------
# power series


def _series_tail(abs_z: float, re_a: float, n: int) -> float:
    """Bound on sum_{m>n} |z|^m m^(-Re a); |n^(-alpha)| = n^(-Re alpha)
    exactly for positive integer n, so no Im-alpha factor appears."""
    t_next = abs_z ** (n + 1) * float(n + 1) ** (-re_a)
    ratio = abs_z * ((n + 2.0) / (n + 1.0)) ** max(0.0, -re_a)
    if ratio >= 1.0:
        return math.inf
    return t_next / (1.0 - ratio)


def eval_series(a: Order, z: complex, cfg: ToleranceConfig = DEFAULT_CONFIG) -> EvalResult:
    """Partial sum of sum_n z^n / n^alpha with a certified geometric tail bound.

    Valid for |z| < 1 and arbitrary complex alpha.
    """
    z = complex(z)
    _check_branch_points(z)
    abs_z = abs(z)
    if abs_z >= 1.0:
        raise DomainError(f"series requires |z| < 1, got |z| = {abs_z}")
    alpha = a.alpha
    tol = 0.5 * cfg.target_abs_err

    n_terms = 8
    while _series_tail(abs_z, alpha.real, n_terms) > tol:
        n_terms *= 2
        if n_terms > cfg.max_series_terms:
            achieved = _series_tail(abs_z, alpha.real, cfg.max_series_terms)
            raise ConvergenceError(
                f"series needs more than {cfg.max_series_terms} terms", achieved=achieved
            )
    bound = _series_tail(abs_z, alpha.real, n_terms)

    log_z = principal_log(z)
    total = 0.0 + 0.0j
    mass = 0.0
    chunk = 65536
    for start in range(1, n_terms + 1, chunk):
        n = np.arange(start, min(start + chunk, n_terms + 1), dtype=float)
        terms = np.exp(n * log_z - alpha * np.log(n))
        total += complex(np.sum(terms))
        mass += float(np.sum(np.abs(terms)))
    err = bound + 8.0 * _EPS * mass
    return EvalResult(value=total, err_estimate=err, method="Series")


# ---------------------------------------------------------------------------
# Appell integral


def eval_appell(a: Order, z: complex, cfg: ToleranceConfig = DEFAULT_CONFIG) -> EvalResult:
    """(1/Gamma(alpha)) * integral over (0, inf) of q^(alpha-1) z/(e^q - z).

    Requires Re alpha > 0.  z may approach the cut from either side (poles
    of the integrand near the real axis are subtracted analytically and
    reinstated in closed form); z = 1 itself is allowed when Re alpha > 1,
    where the value is zeta(alpha).
    """
    z = complex(z)
    alpha = a.alpha
    if alpha.real <= 0.0:
        raise DomainError(f"Appell integral requires Re(alpha) > 0, got {alpha}")
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError("z must be finite")
    at_one = abs(z - 1.0) <= EPS_CUT
    if at_one:
        if alpha.real <= 1.0:
            raise DomainError("z = 1 needs Re(alpha) > 1 for an integrable endpoint")
        z = 1.0 + 0.0j
    elif _near_cut(z) and z.real > 1.0:
        raise DomainError("z on the cut [1, inf); take a side limit instead")

    tol = cfg.target_abs_err
    log_tol = abs(math.log(tol))
    big_q = max(40.0, 2.0 * log_tol, math.log(2.0 * abs(z) + 2.0) + log_tol + 5.0)
    one_minus_z = 1.0 - z

    # endpoint exponent of the integrand at q -> 0+
    sing = alpha.real - 2.0 if at_one else alpha.real - 1.0
    m1 = log_tol + 25.0
    umax_left = m1 / (2.0 * (1.0 + sing)) if sing < 0.0 else 0.5 * m1
    t_left = min(math.asinh(2.0 * umax_left / math.pi), 6.5)
    t_right = min(math.asinh(m1 / math.pi), 6.5)

    # pole of z/(e^q - z) close to the integration interval: residue is
    # exactly 1 at q_0 = Log z, since e^{q_0} = z; the k != 0 poles sit at
    # least pi away from the real axis and never need this
    subtract: list[tuple[complex, complex]] = []
    if not at_one:
        q_0 = principal_log(z)
        if 0.0 < q_0.real < big_q and abs(q_0.imag) < 0.5:
            c_0 = cmath.exp((alpha - 1.0) * principal_log(q_0))
            subtract.append((q_0, c_0))

    def integrand(q: np.ndarray) -> np.ndarray:
        val = np.exp((alpha - 1.0) * np.log(q)) * (z / (np.expm1(q) + one_minus_z))
        for q_k, c_k in subtract:
            val = val - c_k / (q - q_k)
        return val

    quad = tanh_sinh(integrand, big_q, t_left, t_right, tol, max_level=cfg.quad_max_depth)
    if not quad.converged:
        raise ConvergenceError("Appell quadrature did not converge", achieved=quad.err)
    raw = quad.value
    # the subtracted pole terms integrate to c_k Log((Q - q_k)/(-q_k));
    # the principal log of the ratio is correct because a straight segment
    # subtends an angle < pi at any point off it
    for q_k, c_k in subtract:
        raw += c_k * cmath.log((big_q - q_k) / (-q_k))

    decay = max(alpha.real - 1.0, 0.0)
    tail = 2.0 * max(abs(z), 1.0) * math.exp(decay * math.log(big_q) - big_q)
    tail /= max(0.5, 1.0 - decay / big_q)

    gamma_a = gamma(alpha)
    value = raw / gamma_a
    err = (quad.err + tail) / abs(gamma_a)
    return EvalResult(value=value, err_estimate=err, method="Appell")


# ---------------------------------------------------------------------------
# Hankel contour


def hankel_contour_integral(
    a: Order, z: complex, cfg: ToleranceConfig = DEFAULT_CONFIG
) -> tuple[complex, float]:
    """Raw contour integral of q^(alpha-1) z/(e^q - z) over the tilted loop,
    without the C_alpha/(2 pi i) normalisation.

    The loop runs from argument 2 pi - eta inward along a ray to radius r,
    around the circle |q| = r to argument eta, and back out to radius S.
    The phase of q^(alpha-1) follows the assigned argument continuously
    from 2 pi - eta down to eta; it is never reduced to the principal range.
    """
    z = complex(z)
    _check_branch_points(z)
    alpha = a.alpha
    log_z = principal_log(z)
    tol = cfg.target_abs_err

    s_cut = max(40.0, 2.0 * abs(math.log(tol)))
    k_max = int((s_cut + abs(log_z)) / TWO_PI) + 2
    poles = [log_z + TWO_PI * 1j * k for k in range(-k_max, k_max + 1)]
    poles = [q for q in poles if abs(q) <= s_cut + TWO_PI]
    min_angle = min(abs(cmath.phase(q)) for q in poles)
    min_modulus = min(abs(q) for q in poles)
    if min_angle == 0.0:
        raise DomainError("z lies on the branch cut [1, inf); no clearing contour exists")

    eta = min(cfg.hankel_angle, 0.49 * min_angle)
    radius = min(cfg.hankel_radius_cap, 0.49 * min_modulus)
    cos_eta = math.cos(eta)
    # grow S until the integrand at |q| = S is below tol/8
    log_target = math.log(tol / 8.0)
    margin = math.log(2.0 * (abs(z) + 1.0)) + TWO_PI * abs(alpha.imag)
    while (alpha.real - 1.0) * math.log(s_cut) - s_cut * cos_eta + margin > log_target:
        s_cut *= 1.25

    def rational(q: np.ndarray) -> np.ndarray:
        return z / (np.exp(q) - z)

    def ray_piece(phi: float, theta_assigned: float, orientation: float) -> tuple[complex, float]:
        direction = cmath.exp(1j * phi)
        subs: list[tuple[complex, complex]] = []
        for q_k in poles:
            s_proj = (q_k * cmath.exp(-1j * phi)).real
            s_clamped = min(max(s_proj, radius), s_cut)
            if abs(q_k - s_clamped * direction) < 1.0:
                # phase of q_k on this ray's branch of the power
                ph = cmath.phase(q_k)
                while ph <= theta_assigned - math.pi:
                    ph += TWO_PI
                while ph > theta_assigned + math.pi:
                    ph -= TWO_PI
                c_k = cmath.exp((alpha - 1.0) * complex(math.log(abs(q_k)), ph))
                subs.append((q_k, c_k))

        def integrand(s: np.ndarray) -> np.ndarray:
            q = s * direction
            val = np.exp((alpha - 1.0) * (np.log(s) + 1j * theta_assigned)) * rational(q)
            for q_k, c_k in subs:
                val = val - c_k / (q - q_k)
            return val * direction

        breaks = [radius]
        while breaks[-1] < s_cut:
            breaks.append(min(breaks[-1] * 2.0, s_cut))
        quad = integrate_adaptive(integrand, breaks, tol, max_depth=cfg.quad_max_depth)
        if not quad.converged:
            raise ConvergenceError("Hankel ray quadrature did not converge", achieved=quad.err)
        total = quad.value
        start = radius * direction
        end = s_cut * direction
        for q_k, c_k in subs:
            total += c_k * cmath.log((end - q_k) / (start - q_k))
        return orientation * total, quad.err

    def arc_integrand(theta: np.ndarray) -> np.ndarray:
        q = radius * np.exp(1j * theta)
        power = np.exp((alpha - 1.0) * (math.log(radius) + 1j * theta))
        return power * rational(q) * 1j * q

    upper, err_upper = ray_piece(eta, eta, +1.0)
    lower, err_lower = ray_piece(-eta, TWO_PI - eta, -1.0)
    n_arc = max(4, int((TWO_PI - 2.0 * eta) / 0.7) + 1)
    arc_breaks = np.linspace(eta, TWO_PI - eta, n_arc + 1)
    arc_quad = integrate_adaptive(arc_integrand, arc_breaks, tol, max_depth=cfg.quad_max_depth)
    if not arc_quad.converged:
        raise ConvergenceError("Hankel arc quadrature did not converge", achieved=arc_quad.err)

    # the arc is traversed with decreasing argument
    value = upper + lower - arc_quad.value
    tail = 2.0 * math.exp((alpha.real - 1.0) * math.log(s_cut) - s_cut * cos_eta + margin) / cos_eta
    err = err_upper + err_lower + arc_quad.err + tail
    return value, err


def eval_hankel(a: Order, z: complex, cfg: ToleranceConfig = DEFAULT_CONFIG) -> EvalResult:
    """C_alpha/(2 pi i) times the loop integral; any non-integer alpha,
    z off the cut [1, inf)."""
    alpha = a.alpha
    if a.is_integer():
        raise DomainError(
            f"Hankel representation needs non-integer order, got alpha = {alpha}",
            pole=a.nearest_integer,
        )
    raw, raw_err = hankel_contour_integral(a, z, cfg)
    factor = c_alpha(a) / (TWO_PI * 1j)
    return EvalResult(
        value=factor * raw,
        err_estimate=abs(factor) * raw_err,
        method="Hankel",
    )


# ---------------------------------------------------------------------------
# Mittag-Leffler sum of branch terms


def eval_mittag_leffler(a: Order, z: complex, cfg: ToleranceConfig = DEFAULT_CONFIG) -> EvalResult:
    """Bilateral sum of C_alpha (Log z + 2 pi i k)^(alpha-1) over k.

    Requires Re alpha < 0 (absolute convergence) and non-integer alpha.
    The tails |k| > K are replaced by the closed-form antiderivative plus
    Euler-Maclaurin corrections through the third-derivative term; the
    error estimate integrates the first omitted correction.
    """
    z = complex(z)
    _check_branch_points(z)
    alpha = a.alpha
    if a.is_integer():
        raise DomainError(
            f"branch-term sum needs non-integer order, got alpha = {alpha}",
            pole=a.nearest_integer,
        )
    if alpha.real >= 0.0:
        raise DomainError(f"branch-term sum requires Re(alpha) < 0, got {alpha}")

    log_z = principal_log(z)
    k_direct = max(2, int(cfg.ml_direct_terms))
    total = 0.0 + 0.0j
    mass = 0.0
    for k in range(-k_direct, k_direct + 1):
        term = cmath.exp((alpha - 1.0) * log_pos_cut(log_z + TWO_PI * 1j * k))
        total += term
        mass += abs(term)

    edge = k_direct + 1.0
    decay_coeff = TWO_PI - abs(log_z) / edge
    if decay_coeff <= 0.0:
        raise ConvergenceError(
            "ml_direct_terms too small for this z: tail estimate diverges",
            achieved=math.inf,
        )

    def power(base: complex, exponent: complex) -> complex:
        return cmath.exp(exponent * log_pos_cut(base))

    for sign in (1.0, -1.0):
        step = sign * TWO_PI * 1j
        edge_point = log_z + step * edge
        total += -power(edge_point, alpha) / (step * alpha)
        total += 0.5 * power(edge_point, alpha - 1.0)
        total += -step * (alpha - 1.0) * power(edge_point, alpha - 2.0) / 12.0
        total += (
            step ** 3
            * (alpha - 1.0)
            * (alpha - 2.0)
            * (alpha - 3.0)
            * power(edge_point, alpha - 4.0)
            / 720.0
        )

    # first omitted Euler-Maclaurin correction: |B6|/6! int |f^(6)|
    falling = abs(
        (alpha - 1.0) * (alpha - 2.0) * (alpha - 3.0) * (alpha - 4.0) * (alpha - 5.0) * (alpha - 6.0)
    )
    re_a = alpha.real
    tail_err = (
        2.0
        * (1.0 / 42.0)
        / 720.0
        * TWO_PI ** 6
        * falling
        * math.exp(TWO_PI * abs(alpha.imag))
        * decay_coeff ** (re_a - 7.0)
        * edge ** (re_a - 6.0)
        / (6.0 - re_a)
    )
    coeff = c_alpha(a)
    value = coeff * total
    err = abs(coeff) * (tail_err + 16.0 * _EPS * mass)
    return EvalResult(value=value, err_estimate=err, method="MittagLeffler")


# ---------------------------------------------------------------------------
# zeta-coefficient expansion at z = e^w


def eval_zeta_series(a: Order, w: complex, cfg: ToleranceConfig = DEFAULT_CONFIG) -> EvalResult:
    """Li_alpha(e^w) = C_alpha w^(alpha-1) + sum_n zeta(alpha - n) w^n / n!.

    Guaranteed domain: Re alpha < 0 with non-integer alpha, Re w < 0,
    0 < |w| < 2 pi.  The coefficient zeta values must stay inside the
    kernel's admissible range, which caps how many terms are available.

    The singular term is the k = 0 branch term with log z = w, so its
    power carries the [0, 2*pi) argument convention.  The principal
    branch would put a cut on the negative real w axis, right through
    the middle of the expansion's domain, while Li_alpha(e^w) itself is
    analytic there.
    """
    w = complex(w)
    alpha = a.alpha
    if a.is_integer():
        raise DomainError(
            f"expansion needs non-integer order, got alpha = {alpha}",
            pole=a.nearest_integer,
        )
    if alpha.real >= 0.0:
        raise DomainError(f"expansion requires Re(alpha) < 0, got {alpha}")
    if not (math.isfinite(w.real) and math.isfinite(w.imag)):
        raise DomainError("w must be finite")
    if w.real >= 0.0:
        raise DomainError(f"expansion requires Re(w) < 0, got w = {w}")
    if abs(w) >= TWO_PI:
        raise DomainError(f"expansion requires |w| < 2*pi, got |w| = {abs(w)}")

    tol = 0.5 * cfg.target_abs_err
    ratio = abs(w) / TWO_PI
    growth = -alpha.real  # exponent of the polynomial factor in the term bound
    # |zeta(alpha-n)| <= zeta(3) e^{pi |Im alpha|/2} 2^{Re alpha} pi^{Re alpha - 1}
    #                    * Gamma(1+n-Re alpha)/n! * (2 pi)^{-n} for 1+n-Re alpha >= 3,
    # by the functional equation, and Gamma(1+n+g)/n! <= (1+n+g)^g (log-convexity),
    # so |term_n| <= scale * (1+n+g)^g * ratio^n
    scale = 1.21 * math.exp(0.5 * math.pi * abs(alpha.imag)) * 2.0 ** alpha.real * math.pi ** (
        alpha.real - 1.0
    )

    def tail_bound(n: int) -> float:
        ratio_eff = ratio * math.exp(growth / (n + 2.0 + growth))
        if ratio_eff >= 1.0:
            return math.inf
        return scale * (n + 2.0 + growth) ** growth * ratio ** (n + 1) / (1.0 - ratio_eff)

    total = c_alpha(a) * cmath.exp((alpha - 1.0) * log_pos_cut(w))
    w_pow = 1.0 + 0.0j  # w^n / n!
    n = 0
    while True:
        s = alpha - n
        if abs(s) > ZETA_MAX_ABS:
            raise DomainError(
                f"zeta coefficient argument {s} exceeds the kernel range before convergence"
            )
        total += riemann_zeta(s) * w_pow
        if n >= 2 and tail_bound(n) <= tol:
            break
        n += 1
        w_pow *= w / n
        if n > 200:
            raise ConvergenceError(
                "expansion did not converge within 200 terms", achieved=tail_bound(n - 1)
            )

    err = tail_bound(n) + 16.0 * _EPS * abs(total)
    return EvalResult(value=total, err_estimate=err, method="ZetaSeries")


# ---------------------------------------------------------------------------
# closed forms at nonpositive integer order


def _eulerian_numerator(m: int) -> list[int]:
    """Coefficients (ascending) of the numerator polynomial P_m with
    Li_{-m}(z) = P_m(z) / (1-z)^(m+1), from the derivative ladder:
    P_m = z * (P'_{m-1} (1-z) + m P_{m-1}), P_0 = z."""
    coeffs = [0, 1]
    for order in range(1, m + 1):
        deriv = [k * coeffs[k] for k in range(1, len(coeffs))]
        inner = [0] * (len(coeffs) + 1)
        for k, c in enumerate(deriv):
            inner[k] += c
            inner[k + 1] -= c
        for k, c in enumerate(coeffs):
            inner[k] += order * c
        coeffs = [0] + inner
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
    return coeffs


def eval_negint_closed(m: int, z: complex) -> EvalResult:
    """Li_{-m}(z) for integer m >= 1 as the exact rational function
    P_m(z)/(1-z)^(m+1), with integer numerator coefficients."""
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"need a positive integer order drop, got m = {m!r}")
    z = complex(z)
    if abs(z - 1.0) <= EPS_CUT:
        raise DomainError("rational closed form has a pole at z = 1")
    coeffs = _eulerian_numerator(m)
    num = 0.0 + 0.0j
    mass = 0.0
    for c in reversed(coeffs):
        num = num * z + c
        mass = mass * abs(z) + abs(c)
    denom = (1.0 - z) ** (m + 1)
    value = num / denom
    err = (4.0 * m + 16.0) * _EPS * (mass / abs(denom) + abs(value))
    return EvalResult(value=value, err_estimate=err, method="NegIntClosed")


def _li_order_zero(z: complex) -> EvalResult:
    value = z / (1.0 - z)
    err = 8.0 * _EPS * (abs(value) + abs(z) / abs(1.0 - z))
    return EvalResult(value=value, err_estimate=err, method="NegIntClosed")


# ---------------------------------------------------------------------------
# asymptotic leading term


def asymptotic_leading(a: Order, z: complex) -> complex:
    """-(Log z)^alpha / Gamma(alpha+1), the leading large-|z| behaviour.

    Requires Re alpha > 0, |z| > e, z off the cut.
    """
    z = complex(z)
    alpha = a.alpha
    if alpha.real <= 0.0:
        raise DomainError(f"leading term requires Re(alpha) > 0, got {alpha}")
    if abs(z) <= math.e:
        raise DomainError(f"leading term requires |z| > e, got |z| = {abs(z)}")
    if _near_cut(z):
        raise DomainError("z on the branch cut [1, inf)")
    return -principal_pow(principal_log(z), alpha) / gamma(alpha + 1.0)


# ---------------------------------------------------------------------------
# dispatch


def _zeta_series_feasible(a: Order, w: complex, cfg: ToleranceConfig) -> bool:
    """Conservative term-count estimate: the kernel's zeta range caps n at
    roughly |alpha| + n <= bound, so large |w| with very negative Re alpha
    must fall through to the contour instead."""
    ratio = min(0.95, abs(w) / TWO_PI * 1.2)
    if ratio <= 0.0:
        return True
    needed = math.log(0.25 * cfg.target_abs_err) / math.log(ratio)
    return abs(a.alpha) + needed + 2.0 <= ZETA_MAX_ABS


ON_CUT_MESSAGE = "on branch cut [1,inf); use jump or --side"


def eval_auto(a: Order, z: complex, cfg: ToleranceConfig = DEFAULT_CONFIG) -> EvalResult:
    """Pick a backend: closed form at nonpositive integer alpha, series in
    the half disk, zeta expansion near z = 1 on the left, otherwise the
    contour (non-integer alpha) or the real-axis integral (Re alpha > 0).
    """
    z = complex(z)
    _check_branch_points(z)
    if _near_cut(z):
        raise DomainError(ON_CUT_MESSAGE)
    alpha = a.alpha

    if a.is_integer() and a.nearest_integer <= 0:
        m = -a.nearest_integer
        return _li_order_zero(z) if m == 0 else eval_negint_closed(m, z)

    if abs(z) <= 0.5:
        return eval_series(a, z, cfg)

    if alpha.real < 0.0:
        log_z = principal_log(z)
        if log_z.real < 0.0 and abs(log_z) < 5.0 and _zeta_series_feasible(a, log_z, cfg):
            try:
                return eval_zeta_series(a, log_z, cfg)
            except (DomainError, ConvergenceError):
                pass  # the pre-check is an estimate; the contour always applies here

    if not a.is_integer():
        return eval_hankel(a, z, cfg)

    if alpha.real > 0.0:
        if abs(z) >= 1.0:
            raise UnsupportedError(
                "positive integer order outside the unit disk is not supported"
            )
        return eval_appell(a, z, cfg)

    raise UnsupportedError(f"no backend applies to alpha = {alpha}, z = {z}")


def eval_on_cut(
    a: Order, x: float, side: str, cfg: ToleranceConfig = DEFAULT_CONFIG
) -> EvalResult:
    """Side limit of Li_alpha on the cut (1, inf) by Richardson extrapolation.

    Evaluates at x + i*delta and x + 2i*delta (delta signed by `side`,
    "above" or "below") and returns 2 F(delta) - F(2 delta), cancelling
    the leading linear dependence on delta.  Non-integer alpha goes
    through the contour backend; positive integer alpha through the
    real-axis integral; nonpositive integer alpha is rational and has no
    jump, so the closed form is returned directly.
    """
    x = float(x)
    side_key = side.strip().lower()
    if side_key not in ("above", "below"):
        raise ValueError(f"side must be 'above' or 'below', got {side!r}")
    delta = cfg.cut_offset
    if not x > 1.0 + 100.0 * delta:
        raise DomainError(f"need x > 1 with clearance 100*cut_offset, got x = {x}")

    if a.is_integer():
        if a.nearest_integer <= 0:
            m = -a.nearest_integer
            return _li_order_zero(complex(x)) if m == 0 else eval_negint_closed(m, complex(x))
        backend = eval_appell
    else:
        backend = eval_hankel

    sign = 1.0 if side_key == "above" else -1.0
    near = backend(a, complex(x, sign * delta), cfg)
    far = backend(a, complex(x, sign * 2.0 * delta), cfg)
    value = 2.0 * near.value - far.value
    err = abs(near.value - far.value) + 2.0 * near.err_estimate + far.err_estimate
    return EvalResult(value=value, err_estimate=err, method=near.method)


__all__ = [
    "DEFAULT_CONFIG",
    "ON_CUT_MESSAGE",
    "ToleranceConfig",
    "asymptotic_leading",
    "eval_appell",
    "eval_auto",
    "eval_hankel",
    "eval_mittag_leffler",
    "eval_negint_closed",
    "eval_on_cut",
    "eval_series",
    "eval_zeta_series",
    "hankel_contour_integral",
]
