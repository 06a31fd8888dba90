"""Image domains of psi_{A,B}, containment testing and the disk criteria."""

import logging
import math
from typing import Optional, Tuple

import numpy as np

from ..models.domain import (
    ContainmentReport,
    DomainAxes,
    Ellipse,
    HorizontalStrip,
    ImageDomain,
    Method,
    VerticalStrip,
)
from ..models.params import PsiParams
from .complexfn import psi_eval
from .config import Settings, resolve
from .errors import DegenerateDomainError, PreconditionError

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi


def domain_axes(p: PsiParams) -> DomainAxes:
    """Closed-form shorthand constants h1, h2 (symmetric) or k, k1, k2 (conjugate pair).

    Args:
        p (PsiParams): Family parameters

    Returns:
        DomainAxes: The constants; h1 and k2 are ``inf`` when alpha = 1
    """
    alpha = p.alpha
    one_minus = 1.0 - alpha * alpha

    if p.is_symmetric:
        h1 = math.atanh(alpha) / alpha if p.finite else math.inf
        h2 = math.atan2(2.0 * alpha, one_minus) / (2.0 * alpha)
        return DomainAxes(p.mode, p.finite, h1=h1, h2=h2)

    gamma = p.gamma
    a = alpha * math.sin(gamma)
    a2 = alpha * alpha
    k1 = math.atan2(2.0 * a, one_minus) / (2.0 * a)
    k = math.atan2(-a2 * math.sin(2.0 * gamma), 1.0 - a2 * math.cos(2.0 * gamma)) / (2.0 * a)
    k2 = math.asinh(2.0 * a / one_minus) / (2.0 * a) if p.finite else math.inf
    return DomainAxes(p.mode, p.finite, k=k, k1=k1, k2=k2)


def _variant(p: PsiParams, offset: float):
    axes = domain_axes(p)
    if p.is_symmetric:
        if p.finite:
            return Ellipse(offset, axes.h1, axes.h2)
        return HorizontalStrip(-math.pi / 4, math.pi / 4)

    if p.finite:
        return Ellipse(offset + axes.k, axes.k1, axes.k2)
    s = 2.0 * math.sin(p.gamma)
    return VerticalStrip(offset + (p.gamma - math.pi) / s, offset + p.gamma / s)


def image_domain(
    p: PsiParams,
    offset: float = 0.0,
    samples: Optional[int] = None,
    settings: Optional[Settings] = None,
) -> ImageDomain:
    """Build offset + psi(D) with its analytic variant and sampled boundary.

    The boundary is sampled at |z| = 1 - eps, counterclockwise.

    Args:
        p (PsiParams): Family parameters
        offset (float): 0 for psi(D), 1 for 1 + psi(D)
        samples (int, optional): Number of polygon vertices, at least 64

    Returns:
        ImageDomain: Immutable domain description
    """
    settings = resolve(settings)
    samples = settings.polygon_samples if samples is None else samples
    if samples < 64:
        raise PreconditionError(f"samples must be >= 64, got {samples}")

    thetas = np.linspace(0.0, TWO_PI, samples, endpoint=False)
    z = (1.0 - settings.boundary_eps) * np.exp(1j * thetas)
    polygon = psi_eval(p, z, settings) + offset
    anchor = complex(offset, 0.0)
    angles = np.unwrap(np.angle(polygon - anchor))

    for arr in (polygon, angles, thetas):
        arr.setflags(write=False)

    return ImageDomain(
        variant=_variant(p, offset),
        polygon=polygon,
        offset=offset,
        anchor=anchor,
        angles=angles,
        thetas=thetas,
    )


def polygon_margin(d: ImageDomain, points) -> np.ndarray:
    """Signed distance from each point to the boundary edge of its angular wedge.

    The wedge is found by the argument of the point about ``d.anchor``.
    Positive values are inside the polygon.

    Raises:
        DegenerateDomainError: for fewer than 3 vertices
    """
    n = d.vertex_count
    if n < 3:
        raise DegenerateDomainError(f"polygon has {n} vertices")

    pts = np.asarray(points, dtype=complex)
    base = d.angles[0]
    phi = base + np.mod(np.angle(pts - d.anchor) - base, TWO_PI)
    idx = np.clip(np.searchsorted(d.angles, phi, side="right") - 1, 0, n - 1)

    v0 = d.polygon[idx]
    v1 = d.polygon[(idx + 1) % n]
    edge = v1 - v0
    rel = pts - v0
    cross = edge.real * rel.imag - edge.imag * rel.real
    return cross / np.abs(edge)


def analytic_margin(d: ImageDomain, points) -> np.ndarray:
    """Margin of the ellipse or strip inequality, positive inside."""
    pts = np.asarray(points, dtype=complex)
    v = d.variant
    if isinstance(v, Ellipse):
        q = ((pts.real - v.center) / v.semi_real) ** 2 + (pts.imag / v.semi_imag) ** 2
        return min(v.semi_real, v.semi_imag) * (1.0 - np.sqrt(q))
    if isinstance(v, HorizontalStrip):
        return np.minimum(pts.imag - v.v_lo, v.v_hi - pts.imag)
    return np.minimum(pts.real - v.u_lo, v.u_hi - pts.real)


def _beyond_sampled_extent(d: ImageDomain, pts: np.ndarray) -> np.ndarray:
    # The polygon of a strip is truncated near the branch points
    if isinstance(d.variant, HorizontalStrip):
        coord, ref = pts.real, d.polygon.real
    elif isinstance(d.variant, VerticalStrip):
        coord, ref = pts.imag, d.polygon.imag
    else:
        return np.zeros(pts.shape, dtype=bool)
    return (coord > ref.max()) | (coord < ref.min())


def contains(d: ImageDomain, w, settings: Optional[Settings] = None) -> ContainmentReport:
    """Test whether the point ``w`` lies in the domain.

    The polygon margin is authoritative. For strips, points past the
    sampled extent of the truncated polygon use the strip inequality.

    Args:
        d (ImageDomain): Domain
        w (complex): Point to test

    Returns:
        ContainmentReport: Verdict with both margins
    """
    settings = resolve(settings)
    pt = np.asarray([complex(w)])
    analytic = float(analytic_margin(d, pt)[0])

    if _beyond_sampled_extent(d, pt)[0]:
        margin, method = analytic, Method.ANALYTIC
    else:
        margin, method = float(polygon_margin(d, pt)[0]), Method.POLYGON

    report = ContainmentReport(
        inside=margin >= -settings.containment_tol,
        margin=margin,
        method=method,
        analytic_margin=analytic,
    )
    if not report.methods_agree:
        logger.debug("containment methods disagree at %s: polygon %.3g, analytic %.3g",
                     w, margin, analytic)
    return report


def disk_radii(p: PsiParams) -> Tuple[float, float]:
    """Inradius and circumradius of 1 + psi(D) about the point 1."""
    if not p.finite:
        if p.is_symmetric:
            return math.pi / 4, math.inf
        return p.gamma / (2.0 * math.sin(p.gamma)), math.inf

    axes = domain_axes(p)
    if p.is_symmetric:
        return axes.h2, axes.h1
    return axes.k1 + axes.k, axes.k2


def measured_disk_radii(
    p: PsiParams, samples: Optional[int] = None, settings: Optional[Settings] = None
) -> Tuple[float, float]:
    """Sampled min and max of |psi| on the boundary circle."""
    settings = resolve(settings)
    samples = settings.polygon_samples if samples is None else samples
    thetas = np.linspace(0.0, TWO_PI, samples, endpoint=False)
    radius = 1.0 if p.finite else 1.0 - settings.boundary_eps
    moduli = np.abs(psi_eval(p, radius * np.exp(1j * thetas), settings))
    return float(moduli.min()), float(moduli.max())


def ellipse_deviation(
    p: PsiParams, samples: Optional[int] = None, settings: Optional[Settings] = None
) -> float:
    """Largest deviation of psi(boundary) from the ellipse through the axis endpoints.

    Measured as |1 - sqrt(q)| * min(semi axes), with q the ellipse
    quadratic form at each boundary sample.
    """
    if not p.finite:
        raise PreconditionError("ellipse deviation needs alpha < 1")
    settings = resolve(settings)
    samples = settings.polygon_samples if samples is None else samples

    v = _variant(p, 0.0)
    thetas = np.linspace(0.0, TWO_PI, samples, endpoint=False)
    w = psi_eval(p, np.exp(1j * thetas), settings)
    q = ((w.real - v.center) / v.semi_real) ** 2 + (w.imag / v.semi_imag) ** 2
    return float(np.max(np.abs(1.0 - np.sqrt(q))) * min(v.semi_real, v.semi_imag))


def _inscribed_disk(p: PsiParams) -> Tuple[float, float]:
    """Center and radius of the disk of the disk criterion."""
    axes = domain_axes(p)
    if p.is_symmetric:
        return 1.0, axes.h2
    return 1.0 + axes.k, axes.k1


def disk_in_domain(
    p: PsiParams, a: float, r: float, settings: Optional[Settings] = None
) -> bool:
    """Whether D(a, r) lies in 1 + psi(D), for real a with 1 in D(a, r).

    Args:
        p (PsiParams): Family parameters
        a (float): Real center
        r (float): Radius

    Returns:
        bool: |a - c| + r <= R for the criterion disk D(c, R)
    """
    settings = resolve(settings)
    if not abs(1.0 - a) < r:
        raise PreconditionError(f"1 must lie in D({a}, {r})")
    c, radius = _inscribed_disk(p)
    return abs(a - c) + r <= radius + settings.function_tol


def mobius_disk(C: float, D: float) -> Tuple[float, float]:
    """Center and radius of the image of the unit disk under (1+Cz)/(1+Dz)."""
    if not (-1.0 < D < C <= 1.0):
        raise PreconditionError(f"need -1 < D < C <= 1, got C={C}, D={D}")
    denom = 1.0 - D * D
    return (1.0 - C * D) / denom, (C - D) / denom


def janowski_admissible(
    p: PsiParams, C: float, D: float, settings: Optional[Settings] = None
) -> bool:
    """Whether (1+Cz)/(1+Dz) takes D into 1 + psi(D).

    Applies the two-branch inequality on C selected by the image disk's
    center a = (1-CD)/(1-D^2).
    """
    settings = resolve(settings)
    a, _ = mobius_disk(C, D)
    axes = domain_axes(p)
    tol = settings.function_tol

    if p.is_symmetric:
        h2 = axes.h2
        if a <= 1.0:
            return C <= h2 + (1.0 - h2) * D + tol
        return C <= h2 + (1.0 + h2) * D + tol

    k, k1 = axes.k, axes.k1
    if a <= 1.0 + k:
        return C <= k1 - k + (1.0 - k1 + k) * D + tol
    return C <= k1 + k + (1.0 + k1 + k) * D + tol


def janowski_member(
    p: PsiParams, C: float, D: float, settings: Optional[Settings] = None
) -> bool:
    """Membership of f with zf'/f = (1+Cz)/(1+Dz) in the class F[A, B]."""
    return janowski_admissible(p, C, D, settings)
