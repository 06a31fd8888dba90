"""Sharp radius computations for F[A, B].

Covers starlikeness of order delta, univalence, strong starlikeness, the
boundary function g(alpha, gamma) with its angle thresholds, and the
F[A, B]-radii of the Booth lemniscate and cissoid classes.
"""

import logging
import math
from dataclasses import replace
from functools import lru_cache, partial
from typing import Callable, NamedTuple, Optional, Tuple

import numpy as np
from scipy import optimize

from ..models.params import PsiParams
from ..models.results import Branch, GammaThresholds, RadiusResult
from .bounds import arg_terms, order_function
from .complexfn import psi_eval
from .config import Settings, resolve
from .errors import BracketError, InconsistencyError, PreconditionError
from .geometry import domain_axes, image_domain, polygon_margin
from .oracle import find_root, max_on_circle, min_on_circle

logger = logging.getLogger(__name__)

HALF_PI = math.pi / 2
TWO_PI = 2.0 * math.pi

# Relative steps for the sharpness certificates
STARLIKE_STEP = 1e-6
CONTAINMENT_STEP = 1e-4
STARLIKE_ORACLE_TOL = 1e-8


def g_func(alpha, gamma):
    """Boundary value g(alpha, gamma) of the conjugate-pair order function.

    Equals 1 + (atan(a^2 sin 2g / (a^2 cos 2g - 1)) - asin(2a sin g / |1 - A^2|)) / (2a sin g),
    evaluated through arctan2 so that it stays accurate at alpha = 1
    and as gamma approaches 0.

    Args:
        alpha (float or array): In (0, 1]
        gamma (float or array): In (0, pi/2]

    Returns:
        float or ndarray: g(alpha, gamma)
    """
    al = np.asarray(alpha, dtype=float)
    ga = np.asarray(gamma, dtype=float)
    if np.any(al <= 0.0) or np.any(al > 1.0):
        raise PreconditionError("alpha must lie in (0, 1]")
    if np.any(ga <= 0.0) or np.any(ga > HALF_PI + 1e-15):
        raise PreconditionError("gamma must lie in (0, pi/2]")

    a = al * np.sin(ga)
    a2 = al * al
    eta = np.arctan2(2.0 * a, 1.0 - a2)
    tau = np.arctan2(-a2 * np.sin(2.0 * ga), 1.0 - a2 * np.cos(2.0 * ga))
    g = 1.0 - (eta - tau) / (2.0 * a)
    return float(g) if g.ndim == 0 else g


@lru_cache(maxsize=None)
def _gamma0(tol: float) -> float:
    return find_root(lambda g: 2.0 * math.sin(g) - (math.pi - g), 1.0, 1.5, tol=tol).root


def gamma0(settings: Optional[Settings] = None) -> float:
    """Root of g(1, gamma) = 0, i.e. of 2 sin(gamma) = pi - gamma, approximately 1.246."""
    return _gamma0(resolve(settings).root_tol)


def gamma_prime(alpha: float, settings: Optional[Settings] = None) -> float:
    """The unique root of g(alpha, .) in (gamma0, pi/2).

    Raises:
        InconsistencyError: if g(alpha, .) does not change sign there
    """
    if not (0.0 < alpha <= 1.0):
        raise PreconditionError(f"alpha must lie in (0, 1], got {alpha}")
    g0 = gamma0(settings)
    if alpha == 1.0:
        return g0

    left, right = g_func(alpha, g0), g_func(alpha, HALF_PI)
    if not (left < 0.0 < right):
        raise InconsistencyError(
            f"g({alpha}, .) has no sign change on (gamma0, pi/2): {left:.3g}, {right:.3g}"
        )
    try:
        return find_root(lambda g: g_func(alpha, g), g0, HALF_PI, settings=settings).root
    except BracketError as e:
        raise InconsistencyError(str(e)) from e


def gamma_thresholds(alpha: float, settings: Optional[Settings] = None) -> GammaThresholds:
    return GammaThresholds(
        gamma0=gamma0(settings),
        gamma_prime=gamma_prime(alpha, settings),
        g_star=g_func(alpha, HALF_PI),
    )


def min_re_on_circle(p: PsiParams, r: float, settings: Optional[Settings] = None) -> float:
    """Sampled min of Re(1 + psi) on |z| = r, the starlikeness oracle."""
    settings = resolve(settings)
    r = min(r, 1.0 if p.finite else 1.0 - settings.boundary_eps)
    _, value = min_on_circle(
        lambda t: 1.0 + psi_eval(p, r * np.exp(1j * np.asarray(t)), settings).real,
        settings=settings,
    )
    return value


def starlike_radius(
    p: PsiParams, delta: float, settings: Optional[Settings] = None
) -> RadiusResult:
    """Radius of starlikeness of order delta for F[A, B].

    Args:
        p (PsiParams): Family parameters
        delta (float): Order in [0, 1)

    Returns:
        RadiusResult: Closed form for the symmetric pair, root of the order
            function otherwise, or the whole disk
    """
    settings = resolve(settings)
    if not (0.0 <= delta < 1.0):
        raise PreconditionError(f"delta must lie in [0, 1), got {delta}")

    diagnostics = {"delta": delta}
    iterations = 0

    if p.is_symmetric:
        value = math.tanh(p.alpha * (1.0 - delta)) / p.alpha
        branch = Branch.CLOSED_FORM
        provenance = "tanh(alpha(1-delta))/alpha for A = -B = alpha"
        if value >= 1.0:
            value, branch = 1.0, Branch.WHOLE_DISK
    else:
        g = g_func(p.alpha, p.gamma)
        diagnostics["g"] = g
        if delta <= g:
            value, branch = 1.0, Branch.WHOLE_DISK
            provenance = "whole disk: delta <= g(alpha, gamma)"
        else:
            root = find_root(lambda r: order_function(p, r) - delta, 0.0, 1.0, settings=settings)
            value, branch, iterations = root.root, Branch.ROOT_OF_EQ, root.iterations
            provenance = "smallest root of 1 - (eta - tau)/(2 alpha sin gamma) = delta"
            two_a = 2.0 * p.alpha * math.sin(p.gamma)
            spread = (1.0 - order_function(p, value)) * two_a
            diagnostics["tan_form_residual"] = math.tan(spread) - math.tan(two_a * (1.0 - delta))

    residual = 0.0 if branch is Branch.WHOLE_DISK else abs(order_function(p, value) - delta)

    if branch is Branch.WHOLE_DISK:
        margin = min_re_on_circle(p, 1.0 - settings.boundary_eps, settings) - delta
        sharp = False
    else:
        at_value = min_re_on_circle(p, value, settings)
        margin = min_re_on_circle(p, value * (1.0 + STARLIKE_STEP), settings) - delta
        diagnostics["oracle_min_re"] = at_value
        sharp = abs(at_value - delta) <= STARLIKE_ORACLE_TOL and margin < 0.0

    return RadiusResult(
        value=value,
        branch=branch,
        equation_residual=residual,
        sharp=sharp,
        sharpness_margin=margin,
        iterations=iterations,
        provenance=provenance,
        diagnostics=diagnostics,
    )


def univalence_radius(p: PsiParams, settings: Optional[Settings] = None) -> RadiusResult:
    """Radius of starlike univalence, the order-0 starlike radius."""
    result = starlike_radius(p, 0.0, settings)
    return replace(result, provenance="starlike univalence: " + result.provenance)


def _max_abs_arg(p: PsiParams, r: float, settings: Settings) -> float:
    _, value = max_on_circle(
        lambda t: np.abs(np.angle(1.0 + psi_eval(p, r * np.exp(1j * np.asarray(t)), settings))),
        settings=settings,
    )
    return value


def ss_radius(p: PsiParams, beta: float, settings: Optional[Settings] = None) -> RadiusResult:
    """Radius of strong starlikeness of order beta, within (0, r0].

    Solves num(r) = tan(beta pi / 2) den(r) for the argument-bound terms.
    When no root lies below the univalence radius r0, r0 is reported and
    flagged.
    """
    settings = resolve(settings)
    if not (0.0 < beta <= 1.0):
        raise PreconditionError(f"beta must lie in (0, 1], got {beta}")

    r0_result = univalence_radius(p, settings)
    r0 = r0_result.value
    if beta == 1.0:
        return replace(
            r0_result,
            provenance="beta = 1: coincides with the univalence radius",
            diagnostics={**r0_result.diagnostics, "beta": beta, "r0": r0},
        )

    slope = math.tan(beta * HALF_PI)
    hi = r0 if r0 < 1.0 else 1.0 - settings.boundary_eps

    def equation(r: float) -> float:
        num, den = arg_terms(p, r)
        return num - slope * den

    diagnostics = {"beta": beta, "r0": r0}
    if equation(hi) <= 0.0:
        logger.warning("no strong-starlikeness root below r0 = %.6g for beta = %g", r0, beta)
        diagnostics["root_in_range"] = False
        bound = beta * HALF_PI
        return RadiusResult(
            value=r0,
            branch=Branch.WHOLE_DISK,
            equation_residual=0.0,
            sharp=False,
            sharpness_margin=bound - _max_abs_arg(p, hi, settings),
            iterations=0,
            provenance="no root in (0, r0]: reporting r0",
            diagnostics=diagnostics,
        )

    root = find_root(equation, 0.0, hi, settings=settings)
    sampled = _max_abs_arg(p, root.root, settings)
    diagnostics["root_in_range"] = True
    diagnostics["sampled_max_arg"] = sampled
    return RadiusResult(
        value=root.root,
        branch=Branch.ROOT_OF_EQ,
        equation_residual=abs(root.residual),
        sharp=False,
        sharpness_margin=beta * HALF_PI - sampled,
        iterations=root.iterations,
        provenance="root of the argument bound atan(num/den) = beta pi/2",
        diagnostics=diagnostics,
    )


def booth_curve(z, alpha: float):
    """Booth lemniscate map z / (1 - alpha z^2)."""
    z = np.asarray(z, dtype=complex)
    return z / (1.0 - alpha * z * z)


def cissoid_curve(z, alpha: float):
    """Cissoid map z / ((1 - z)(1 + alpha z))."""
    z = np.asarray(z, dtype=complex)
    return z / ((1.0 - z) * (1.0 + alpha * z))


def _booth_radius(alpha: float, h: float) -> float:
    # Positive root of alpha h r^2 + r - h = 0
    return 2.0 * h / (1.0 + math.sqrt(1.0 + 4.0 * alpha * h * h))


def _cissoid_radius(alpha: float, h: float) -> float:
    # Positive root of alpha h r^2 + (1 + (1 - alpha) h) r - h = 0
    b = 1.0 + (1.0 - alpha) * h
    return 2.0 * h / (b + math.sqrt(b * b + 4.0 * alpha * h * h))


class _ClassCurve(NamedTuple):
    name: str
    curve: Callable
    radius: Callable[[float, float], float]
    tip: Callable[[float, float], float]
    theta_range: Tuple[float, float]


_CLASSES = {
    "booth": _ClassCurve(
        "booth",
        booth_curve,
        _booth_radius,
        lambda r, al: r / (1.0 - al * r * r),
        (1e-3, HALF_PI),
    ),
    "cissoid": _ClassCurve(
        "cissoid",
        cissoid_curve,
        _cissoid_radius,
        lambda r, al: r / ((1.0 - r) * (1.0 + al * r)),
        (1e-3, math.pi - 1e-3),
    ),
}


def ellipse_margin_min(
    curve: Callable,
    p: PsiParams,
    r: float,
    theta_range: Tuple[float, float] = (1e-3, HALF_PI),
    settings: Optional[Settings] = None,
) -> float:
    """Minimum over theta of F(theta) / sin(theta)^2.

    F = 1 - (x - c)^2/a^2 - y^2/b^2 is the ellipse margin of the point
    curve(r e^{i theta}). F vanishes at theta = 0 by construction of the
    tip radius, so it is divided by sin^2.
    """
    settings = resolve(settings)
    if not p.finite:
        raise PreconditionError("the ellipse margin needs alpha < 1")

    axes = domain_axes(p)
    if p.is_symmetric:
        center, semi_re, semi_im = 0.0, axes.h1, axes.h2
    else:
        center, semi_re, semi_im = axes.k, axes.k1, axes.k2

    def normalized(theta):
        theta = np.asarray(theta, dtype=float)
        w = curve(r * np.exp(1j * theta))
        f = 1.0 - ((w.real - center) / semi_re) ** 2 - (w.imag / semi_im) ** 2
        return f / np.sin(theta) ** 2

    lo, hi = theta_range
    grid = np.linspace(lo, hi, settings.circle_samples)
    values = normalized(grid)
    i = int(np.argmin(values))
    best = float(values[i])

    res = optimize.minimize_scalar(
        lambda t: float(normalized(t)),
        bounds=(grid[max(i - 1, 0)], grid[min(i + 1, grid.size - 1)]),
        method="bounded",
        options={"xatol": 1e-12},
    )
    if res.success and res.fun < best:
        best = float(res.fun)
    return best


def _tip_margin(shape: _ClassCurve, alpha: float, settings: Settings) -> float:
    p = PsiParams.symmetric(alpha)
    r0 = shape.radius(alpha, domain_axes(p).h1)
    return ellipse_margin_min(partial(shape.curve, alpha=alpha), p, r0, shape.theta_range, settings)


@lru_cache(maxsize=None)
def _alpha0(kind: str, settings: Settings) -> Tuple[float, bool]:
    shape = _CLASSES[kind]
    margin = partial(_tip_margin, shape, settings=settings)

    grid = np.linspace(0.02, 0.98, 49)
    prev, m_prev = float(grid[0]), margin(float(grid[0]))
    if m_prev <= 0.0:
        logger.warning("%s margin already non-positive at alpha = %g", kind, prev)
        return prev, True

    for alpha in grid[1:]:
        alpha = float(alpha)
        m = margin(alpha)
        if m <= 0.0:
            root = find_root(margin, prev, alpha, tol=1e-10, settings=settings)
            logger.debug("%s alpha0 = %.12g", kind, root.root)
            return root.root, True
        prev = alpha

    logger.warning("no %s alpha0 crossing found in (0, 1); using 1", kind)
    return 1.0, False


def _check_symmetric(p: Optional[PsiParams]) -> None:
    if p is not None and not p.is_symmetric:
        raise PreconditionError("alpha0 is defined for the symmetric pair only")


def alpha0_bs(p: Optional[PsiParams] = None, settings: Optional[Settings] = None) -> float:
    """Smallest alpha at which the Booth curve at its tip radius touches the ellipse."""
    _check_symmetric(p)
    return _alpha0("booth", resolve(settings))[0]


def alpha0_cs(p: Optional[PsiParams] = None, settings: Optional[Settings] = None) -> float:
    """Smallest alpha at which the cissoid curve at its tip radius touches the ellipse."""
    _check_symmetric(p)
    return _alpha0("cissoid", resolve(settings))[0]


def _class_radius(
    kind: str,
    alpha_class: float,
    p: PsiParams,
    coupled: bool,
    settings: Optional[Settings],
) -> RadiusResult:
    settings = resolve(settings)
    if not (0.0 < alpha_class < 1.0):
        raise PreconditionError(f"class alpha must lie in (0, 1), got {alpha_class}")
    if coupled and alpha_class != p.alpha:
        raise PreconditionError(
            f"coupled radius needs class alpha = psi alpha, got {alpha_class} and {p.alpha}"
        )

    shape = _CLASSES[kind]
    curve = partial(shape.curve, alpha=alpha_class)
    axes = domain_axes(p)
    diagnostics = {"alpha_class": alpha_class, "coupled": coupled}

    if p.is_symmetric:
        use_tip = False
        if p.finite:
            if coupled:
                alpha0, found = _alpha0(kind, settings)
                diagnostics["alpha0"] = alpha0
                diagnostics["alpha0_found"] = found
                use_tip = alpha_class <= alpha0
            else:
                r_tip = shape.radius(alpha_class, axes.h1)
                m = ellipse_margin_min(curve, p, min(r_tip, 1.0), shape.theta_range, settings)
                diagnostics["ellipse_margin"] = m
                use_tip = m >= 0.0
        h, label = (axes.h1, "r0") if use_tip else (axes.h2, "r1")
    else:
        h, label = axes.k1 + axes.k, "r2"

    value = shape.radius(alpha_class, h)
    branch = Branch.CLOSED_FORM
    diagnostics["formula"] = label
    if value >= 1.0:
        value, branch = 1.0, Branch.WHOLE_DISK

    residual = 0.0 if branch is Branch.WHOLE_DISK else abs(shape.tip(value, alpha_class) - h)

    domain = image_domain(p, 0.0, settings=settings)
    thetas = np.linspace(0.0, TWO_PI, settings.circle_samples, endpoint=False)
    r_max = 1.0 - settings.boundary_eps

    def margin_at(r: float) -> float:
        return float(np.min(polygon_margin(domain, curve(min(r, r_max) * np.exp(1j * thetas)))))

    inside = margin_at(value)
    outside = margin_at(value * (1.0 + CONTAINMENT_STEP))
    diagnostics["margin_at_value"] = inside
    if label == "r1" and p.finite:
        # Polygon verdict at the tip radius the ellipse test rejected
        diagnostics["polygon_margin_at_r0"] = margin_at(shape.radius(alpha_class, axes.h1))
    sharp = (
        branch is not Branch.WHOLE_DISK
        and inside >= -settings.sharpness_tol
        and outside < 0.0
    )

    return RadiusResult(
        value=value,
        branch=branch,
        equation_residual=residual,
        sharp=sharp,
        sharpness_margin=outside,
        iterations=0,
        provenance=f"{kind} curve tip reaches h = {label} domain radius",
        diagnostics=diagnostics,
    )


def bs_radius(
    alpha_class: float,
    p: PsiParams,
    coupled: bool = True,
    settings: Optional[Settings] = None,
) -> RadiusResult:
    """F[A, B]-radius of the Booth lemniscate class with parameter ``alpha_class``.

    Args:
        alpha_class (float): Class parameter in (0, 1)
        p (PsiParams): Family parameters
        coupled (bool): Require alpha_class = p.alpha

    Returns:
        RadiusResult: r0 (tip on the real semi-axis), r1 (inscribed disk)
            or r2 (conjugate pair)
    """
    return _class_radius("booth", alpha_class, p, coupled, settings)


def cs_radius(
    alpha_class: float,
    p: PsiParams,
    coupled: bool = True,
    settings: Optional[Settings] = None,
) -> RadiusResult:
    """F[A, B]-radius of the cissoid class with parameter ``alpha_class``."""
    return _class_radius("cissoid", alpha_class, p, coupled, settings)


def class_curve(kind: str) -> Callable:
    """The map of a named class: ``booth`` or ``cissoid``."""
    try:
        return _CLASSES[kind].curve
    except KeyError:
        raise PreconditionError(f"unknown class curve: {kind}") from None
