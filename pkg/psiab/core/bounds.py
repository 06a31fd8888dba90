"""Envelopes, growth and argument bounds for the class F[A, B]."""

import logging
import math
from typing import Optional, Tuple

import numpy as np

from ..models.params import PsiParams
from ..models.results import BoundEnvelope, GrowthBounds
from .complexfn import extremal_eval, psi_eval
from .config import Settings, resolve
from .errors import PreconditionError
from .oracle import max_on_circle

logger = logging.getLogger(__name__)


def _conjugate_angles(p: PsiParams, r: float) -> Tuple[float, float, float]:
    """eta, tau and log T1 at radius r for the conjugate pair."""
    a = p.alpha * math.sin(p.gamma)
    x2 = (p.alpha * r) ** 2
    eta = math.atan2(2.0 * a * r, 1.0 - x2)
    tau = math.atan2(-x2 * math.sin(2.0 * p.gamma), 1.0 - x2 * math.cos(2.0 * p.gamma))
    if 1.0 - x2 <= 0.0:
        log_t1 = math.inf
    else:
        log_t1 = math.asinh(2.0 * a * r / (1.0 - x2))
    return eta, tau, log_t1


def _atanh_or_inf(x: float) -> float:
    return math.inf if x >= 1.0 else math.atanh(x)


def envelope(p: PsiParams, r: float) -> BoundEnvelope:
    """Bounds on Re p and Im p for p subordinate to psi on |z| <= r.

    Args:
        p (PsiParams): Family parameters
        r (float): Radius in (0, 1]; r = 1 only when alpha < 1

    Returns:
        BoundEnvelope: reLo <= Re p <= reHi and imLo <= Im p <= imHi
    """
    if not (0.0 < r <= 1.0):
        raise PreconditionError(f"r must lie in (0, 1], got {r}")
    if r == 1.0 and not p.finite:
        raise PreconditionError("the envelope at r = 1 diverges for alpha = 1")

    alpha = p.alpha
    if p.is_symmetric:
        x = alpha * r
        re_hi = math.atanh(x) / alpha
        im_hi = math.atan2(2.0 * x, 1.0 - x * x) / (2.0 * alpha)
        return BoundEnvelope(r, -re_hi, re_hi, -im_hi, im_hi)

    eta, tau, log_t1 = _conjugate_angles(p, r)
    two_a = 2.0 * alpha * math.sin(p.gamma)
    t1, t2 = math.exp(log_t1), math.exp(-log_t1)
    im_bounds = sorted((log_t1 / two_a, -log_t1 / two_a))
    return BoundEnvelope(
        r=r,
        re_lo=-(eta - tau) / two_a,
        re_hi=(eta + tau) / two_a,
        im_lo=im_bounds[0],
        im_hi=im_bounds[1],
        eta=eta,
        tau=tau,
        T1=t1,
        T2=t2,
    )


def order_function(p: PsiParams, r: float) -> float:
    """Lower bound 1 + min Re psi on |z| = r.

    Strictly decreasing in r. In conjugate-pair mode it stays finite at
    r = 1, where it equals g(alpha, gamma).
    """
    if not (0.0 <= r <= 1.0):
        raise PreconditionError(f"r must lie in [0, 1], got {r}")
    if p.is_symmetric:
        return 1.0 - _atanh_or_inf(p.alpha * r) / p.alpha
    eta, tau, _ = _conjugate_angles(p, r)
    return 1.0 - (eta - tau) / (2.0 * p.alpha * math.sin(p.gamma))


def ratio_bounds(p: PsiParams, r: float, settings: Optional[Settings] = None) -> Tuple[float, float]:
    """(M(-r), M(r)) with M(r) = f_{A,B}(r) / r."""
    if not (0.0 < r <= 1.0):
        raise PreconditionError(f"r must lie in (0, 1], got {r}")
    m_minus = extremal_eval(p, -r, settings).real / -r
    m_plus = extremal_eval(p, r, settings).real / r
    return m_minus, m_plus


def growth(p: PsiParams, r: float, settings: Optional[Settings] = None) -> GrowthBounds:
    """Growth, ratio, derivative and length bounds at radius r.

    Args:
        p (PsiParams): Family parameters
        r (float): Radius in (0, 1)

    Returns:
        GrowthBounds: Growth, ratio, derivative and length bounds
    """
    settings = resolve(settings)
    if not (0.0 < r < 1.0):
        raise PreconditionError(f"r must lie in (0, 1), got {r}")

    m_minus, m_plus = ratio_bounds(p, r, settings)
    _, maxmod = max_on_circle(
        lambda t: np.abs(psi_eval(p, r * np.exp(1j * np.asarray(t)), settings)),
        settings=settings,
    )
    factor = 1.0 + maxmod
    return GrowthBounds(
        r=r,
        lower=m_minus * r,
        upper=m_plus * r,
        ratio_lower=m_minus,
        ratio_upper=m_plus,
        deriv_lower=factor * m_minus,
        deriv_upper=factor * m_plus,
        length_lower=2.0 * math.pi * r * factor * m_minus,
        length_upper=2.0 * math.pi * r * factor * m_plus,
        maxmod=maxmod,
    )


def covering_constant(p: PsiParams, settings: Optional[Settings] = None) -> float:
    """Radius -f_{A,B}(-1) of the disk covered by every f in F[A, B]."""
    return float(-extremal_eval(p, -1.0, settings).real)


def arg_terms(p: PsiParams, r: float) -> Tuple[float, float]:
    """Numerator and denominator of the tangent of the argument bound.

    The argument of 1 + p on |z| <= r is at most atan(num / den); the
    denominator vanishes at the univalence radius.
    """
    alpha = p.alpha
    if p.is_symmetric:
        x = alpha * r
        num = math.atan2(2.0 * x, 1.0 - x * x)
        den = 2.0 * alpha - 2.0 * _atanh_or_inf(x)
        return num, den
    eta, tau, log_t1 = _conjugate_angles(p, r)
    return log_t1, 2.0 * alpha * math.sin(p.gamma) - eta + tau


def arg_bound(p: PsiParams, r: float, settings: Optional[Settings] = None) -> float:
    """Upper bound on |arg(zf'/f)| over |z| <= r for f in F[A, B].

    Returns pi/2 where the denominator is not positive.

    Raises:
        PreconditionError: for r beyond the univalence radius
    """
    settings = resolve(settings)
    if not (0.0 < r <= 1.0):
        raise PreconditionError(f"r must lie in (0, 1], got {r}")
    if order_function(p, r) < -settings.containment_tol:
        raise PreconditionError(f"r = {r} lies beyond the univalence radius")

    num, den = arg_terms(p, r)
    if den <= 0.0 or math.isinf(num):
        return math.pi / 2
    return math.atan(num / den)
