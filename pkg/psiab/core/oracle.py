"""Independent numerical machinery the other modules validate against.

Everything here is deterministic: grids are fixed, no randomness is used
except in ``schwarz_probes``, which takes an explicit seed.
"""

import logging
import math
import warnings
from functools import partial
from typing import Callable, List, Optional, Tuple

import numpy as np
from scipy import integrate as sp_integrate
from scipy import optimize

from ..models.domain import ImageDomain
from ..models.results import BracketedRoot, SweepGrid
from .config import Settings, resolve
from .errors import BracketError, IntegrationError, MonotonicityError, PreconditionError
from .geometry import polygon_margin

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi


def find_root(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: Optional[float] = None,
    settings: Optional[Settings] = None,
) -> BracketedRoot:
    """Find a root of ``f`` inside a sign-changing bracket.

    Brent's method (bisection with inverse-quadratic and secant steps
    that never leave the bracket).

    Args:
        f (Callable): Continuous real function on [lo, hi]
        lo (float): Left end of the bracket
        hi (float): Right end of the bracket
        tol (float, optional): Absolute tolerance on the argument

    Returns:
        BracketedRoot: Root, residual and iteration count

    Raises:
        BracketError: if f(lo) and f(hi) have the same sign or the solver
            does not converge
    """
    settings = resolve(settings)
    tol = settings.root_tol if tol is None else tol

    f_lo, f_hi = f(lo), f(hi)
    if f_lo == 0.0:
        return BracketedRoot(lo, hi, lo, 0.0, 0)
    if f_hi == 0.0:
        return BracketedRoot(lo, hi, hi, 0.0, 0)
    if np.sign(f_lo) == np.sign(f_hi):
        raise BracketError(
            f"no sign change on [{lo:.17g}, {hi:.17g}]: f(lo)={f_lo:.6g}, f(hi)={f_hi:.6g}"
        )

    root, info = optimize.brentq(
        f, lo, hi, xtol=tol, maxiter=settings.max_iterations, full_output=True, disp=False
    )
    if not info.converged:
        raise BracketError(f"root search on [{lo}, {hi}] did not converge: {info.flag}")

    residual = float(f(root))
    logger.debug("find_root [%g, %g] -> %.17g in %d iterations", lo, hi, root, info.iterations)
    return BracketedRoot(lo, hi, float(root), residual, int(info.iterations))


def integrate(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: Optional[float] = None,
    settings: Optional[Settings] = None,
) -> float:
    """Adaptive Gauss-Kronrod quadrature of ``f`` over [a, b].

    Raises:
        IntegrationError: if the error estimate exceeds ``tol`` within the
            subdivision budget
    """
    settings = resolve(settings)
    tol = settings.quad_tol if tol is None else tol

    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", sp_integrate.IntegrationWarning)
        value, abserr = sp_integrate.quad(
            f, a, b, epsabs=tol, epsrel=0.0, limit=settings.quad_limit
        )

    if abserr > tol:
        raise IntegrationError(
            f"quadrature on [{a}, {b}] reached error estimate {abserr:.3g} > {tol:.3g}"
        )
    for w in caught:
        logger.debug("quadrature warning (error estimate %.3g): %s", abserr, w.message)
    return float(value)


def _evaluate_on_grid(g: Callable, thetas: np.ndarray) -> np.ndarray:
    try:
        values = np.asarray(g(thetas), dtype=float)
        if values.shape == thetas.shape:
            return values
    except TypeError:
        pass
    return np.array([float(g(t)) for t in thetas])


def max_on_circle(
    g: Callable,
    samples: Optional[int] = None,
    settings: Optional[Settings] = None,
) -> Tuple[float, float]:
    """Maximize an angle function over [0, 2*pi).

    A coarse scan picks the best grid angle, then bounded Brent
    refinement (golden section with parabolic steps) runs within one grid
    step on each side. The grid point is kept unless the refinement is
    strictly better.

    Args:
        g (Callable): Real function of the angle; vectorised or scalar
        samples (int, optional): Grid size, at least 64

    Returns:
        Tuple[float, float]: (theta, value) with theta in [0, 2*pi)
    """
    settings = resolve(settings)
    samples = settings.circle_samples if samples is None else samples
    if samples < 64:
        raise PreconditionError(f"samples must be >= 64, got {samples}")

    thetas = np.linspace(0.0, TWO_PI, samples, endpoint=False)
    values = _evaluate_on_grid(g, thetas)
    i = int(np.argmax(values))
    best_theta, best_value = float(thetas[i]), float(values[i])

    step = TWO_PI / samples
    res = optimize.minimize_scalar(
        lambda t: -float(g(t)),
        bounds=(best_theta - step, best_theta + step),
        method="bounded",
        options={"xatol": 1e-12},
    )
    if res.success and -res.fun > best_value:
        best_theta, best_value = float(res.x), float(-res.fun)

    return math.fmod(best_theta + TWO_PI, TWO_PI), best_value


def min_on_circle(
    g: Callable,
    samples: Optional[int] = None,
    settings: Optional[Settings] = None,
) -> Tuple[float, float]:
    """Minimize an angle function over [0, 2*pi); see ``max_on_circle``."""
    theta, value = max_on_circle(lambda t: -np.asarray(g(t)), samples, settings)
    return theta, -value


def containment_radius(
    curve: Callable[[float, np.ndarray], np.ndarray],
    d: ImageDomain,
    tol: Optional[float] = None,
    settings: Optional[Settings] = None,
) -> float:
    """Largest r in (0, 1] with curve(r, theta) inside ``d`` for all sampled theta.

    The minimum polygon margin over the angle grid must not increase with
    r; this is checked at a handful of probe radii before bisecting.

    Args:
        curve (Callable): Vectorised map (r, thetas) -> complex points
        d (ImageDomain): Target domain
        tol (float, optional): Absolute tolerance on r

    Returns:
        float: The containment radius; 1.0 if the curve stays inside up to
            the boundary epsilon

    Raises:
        MonotonicityError: if the margin increases between probe radii
    """
    settings = resolve(settings)
    thetas = np.linspace(0.0, TWO_PI, settings.circle_samples, endpoint=False)

    def margin(r: float) -> float:
        return float(np.min(polygon_margin(d, curve(r, thetas))))

    count = settings.monotonicity_probes
    probes = [k / (count + 1) for k in range(1, count + 1)]
    margins = [margin(r) for r in probes]
    for (r0, m0), (r1, m1) in zip(zip(probes, margins), zip(probes[1:], margins[1:])):
        if m1 > m0 + settings.sharpness_tol:
            raise MonotonicityError(
                f"containment margin increases from {m0:.6g} at r={r0:.4f} to {m1:.6g} at r={r1:.4f}"
            )

    r_top = 1.0 - settings.boundary_eps
    m_top = margin(r_top)
    if m_top > 0:
        logger.debug("curve stays inside up to r=%g (margin %.3g)", r_top, m_top)
        return 1.0

    lo, hi = 0.0, r_top
    for r, m in zip(probes, margins):
        if m > 0:
            lo = r
        else:
            hi = r
            break

    return find_root(margin, lo, hi, tol=tol, settings=settings).root


def sweep(
    name: str,
    lo: float,
    hi: float,
    count: int,
    fn: Callable[[float], float],
    endpoints: bool = True,
) -> SweepGrid:
    """Evaluate ``fn`` on ``count`` evenly spaced points.

    Args:
        name (str): Parameter name, for reporting
        lo (float): Lower end
        hi (float): Upper end
        count (int): Number of points, at least 2
        fn (Callable): Scalar function
        endpoints (bool): Include lo and hi; otherwise use interior points only

    Returns:
        SweepGrid: Abscissae and evaluations in increasing order
    """
    if count < 2:
        raise PreconditionError(f"sweep needs at least 2 points, got {count}")
    if not lo < hi:
        raise PreconditionError(f"sweep needs lo < hi, got [{lo}, {hi}]")

    if endpoints:
        values = np.linspace(lo, hi, count)
    else:
        values = np.linspace(lo, hi, count + 2)[1:-1]
    evaluations = np.array([fn(float(v)) for v in values], dtype=float)
    return SweepGrid(name, lo, hi, count, values, evaluations)


def _blaschke_probe(zeros: np.ndarray, phase: float, z):
    z = np.asarray(z, dtype=complex)
    u = np.full(z.shape, np.exp(1j * phase), dtype=complex)
    for a in zeros:
        u = u * (z - a) / (1.0 - np.conj(a) * z)
    return z * u


def schwarz_probes(count: int, seed: int = 0, max_degree: int = 3) -> List[Callable]:
    """Random Schwarz functions w(z) = z*u(z), u a finite Blaschke product.

    Each probe maps the unit disk into itself with w(0) = 0 and
    |w(z)| <= |z|.

    Args:
        count (int): Number of probes
        seed (int): Seed for ``numpy.random.default_rng``
        max_degree (int): Largest number of Blaschke factors

    Returns:
        List[Callable]: Vectorised probe functions
    """
    rng = np.random.default_rng(seed)
    probes = []
    for _ in range(count):
        degree = int(rng.integers(0, max_degree + 1))
        radii = 0.95 * np.sqrt(rng.random(degree))
        angles = rng.uniform(0.0, TWO_PI, degree)
        zeros = radii * np.exp(1j * angles)
        phase = float(rng.uniform(0.0, TWO_PI))
        probes.append(partial(_blaschke_probe, zeros, phase))
    return probes
