"""Acceptance suites run by ``psiab verify``."""

import logging
import math
from functools import partial
from typing import Callable, Dict, List, Optional

import numpy as np

from ..models.params import PsiParams
from ..models.results import CheckResult, SuiteReport
from . import bounds, complexfn, geometry, oracle, radii
from .config import Settings, resolve

logger = logging.getLogger(__name__)

HALF_PI = math.pi / 2
BOUNDARY_SUPREMUM = 1.0 - math.pi / 4

COEFFICIENT_SETS = [
    PsiParams.symmetric(0.25),
    PsiParams.symmetric(0.5),
    PsiParams.symmetric(0.75),
    PsiParams.symmetric(0.9),
    PsiParams.symmetric(1.0),
    PsiParams.conjugate(0.5, math.pi / 3),
    PsiParams.conjugate(0.9, math.pi / 4),
    PsiParams.conjugate(1.0, math.pi / 6),
    PsiParams.conjugate(0.3, 0.1),
    PsiParams.conjugate(0.75, HALF_PI),
]

CONVEXITY_SETS = [
    PsiParams.symmetric(0.1),
    PsiParams.symmetric(0.5),
    PsiParams.symmetric(0.9),
    PsiParams.symmetric(0.99),
    PsiParams.conjugate(0.5, math.pi / 3),
    PsiParams.conjugate(0.9, math.pi / 4),
    PsiParams.conjugate(0.99, 0.2),
    PsiParams.conjugate(0.99, HALF_PI),
    PsiParams.conjugate(0.25, 1.0),
    PsiParams.conjugate(0.7, 1.4),
]

GROWTH_SETS = [
    PsiParams.symmetric(0.25),
    PsiParams.symmetric(0.5),
    PsiParams.symmetric(1.0),
    PsiParams.conjugate(0.5, math.pi / 3),
    PsiParams.conjugate(0.9, math.pi / 4),
    PsiParams.conjugate(1.0, HALF_PI),
]


def _check(name: str, passed: bool, detail: str = "", info: bool = False) -> CheckResult:
    return CheckResult(name=name, passed=bool(passed), detail=detail, info=info)


def psi_over_t(p: PsiParams, t: float) -> float:
    """psi(t)/t on the real axis, extended by 1 at t = 0."""
    if t == 0.0:
        return 1.0
    return complexfn.psi_eval(p, t).real / t


def suite_gamma(alpha: float, settings: Settings) -> SuiteReport:
    report = SuiteReport("gamma")
    g0 = radii.gamma0(settings)
    report.checks.append(_check("gamma0 in [1.2456, 1.2466]", 1.2456 <= g0 <= 1.2466, f"{g0:.12f}"))

    g_corner = radii.g_func(1.0, HALF_PI)
    report.checks.append(_check(
        "g(1, pi/2) = 1 - pi/4",
        abs(g_corner - BOUNDARY_SUPREMUM) <= 1e-12,
        f"{g_corner:.15f}",
    ))

    n = 200
    al = np.arange(1, n + 1) / n
    ga = np.arange(1, n + 1) * HALF_PI / n
    surface = radii.g_func(al[:, None], ga[None, :])
    g_max = float(surface.max())
    report.checks.append(_check(
        "max g on 200x200 grid <= 1 - pi/4",
        g_max <= BOUNDARY_SUPREMUM + 1e-9,
        f"{g_max:.12f}",
    ))

    grid = np.linspace(1e-3, HALF_PI, 200)
    slopes = np.diff(radii.g_func(1.0, grid))
    report.checks.append(_check("g(1, .) strictly increasing", np.all(slopes > 0)))

    if alpha < 1.0:
        gp = radii.gamma_prime(alpha, settings)
        inner = np.linspace(g0, HALF_PI, 102)[1:-1]
        signs = radii.g_func(alpha, inner)
        pattern = np.all(signs[inner < gp] < 0) and np.all(signs[inner > gp] > 0)
        report.checks.append(_check(
            f"gamma'({alpha}) root and sign pattern",
            g0 < gp < HALF_PI and abs(radii.g_func(alpha, gp)) <= 1e-10 and pattern,
            f"{gp:.12f}",
        ))
    return report


def suite_coefficients(alpha: float, settings: Settings) -> SuiteReport:
    report = SuiteReport("coefficients")
    ones = all(complexfn.psi_coeff(p, 1) == 1.0 for p in COEFFICIENT_SETS)
    report.checks.append(_check("C_1 = 1", ones))
    zeros = all(complexfn.psi_coeff(p, 2) == 0.0 for p in COEFFICIENT_SETS if p.is_symmetric)
    report.checks.append(_check("symmetric C_2 = 0", zeros))

    bounded = all(
        abs(complexfn.psi_coeff(p, n)) <= p.alpha ** (n - 1) * (1.0 + 1e-12)
        for p in COEFFICIENT_SETS
        for n in range(1, 101)
    )
    report.checks.append(_check("|C_n| <= alpha^(n-1), n <= 100", bounded))

    thetas = np.linspace(0.0, 2 * math.pi, 64, endpoint=False)
    z = np.concatenate([rho * np.exp(1j * thetas) for rho in (0.3, 0.6, 0.9)])
    worst = max(
        float(np.max(np.abs(complexfn.psi_eval(p, z, settings) - complexfn.psi_series(p, z, 400))))
        for p in COEFFICIENT_SETS
    )
    report.checks.append(_check("series = direct for |z| <= 0.9", worst <= 1e-12, f"{worst:.3g}"))

    rel = settings.dilog_rel_tol
    special = max(
        abs(complexfn.dilog(1.0) - math.pi ** 2 / 6) / (math.pi ** 2 / 6),
        abs(complexfn.dilog(-1.0) + math.pi ** 2 / 12) / (math.pi ** 2 / 12),
    )
    report.checks.append(_check("Li2(1) = pi^2/6, Li2(-1) = -pi^2/12", special <= rel, f"{special:.3g}"))

    w = np.concatenate([rho * np.exp(1j * thetas) for rho in (0.5, 0.9, 0.99)])
    rhs = complexfn.dilog(w * w) / 2.0
    duplication = float(np.max(
        np.abs(complexfn.dilog(w) + complexfn.dilog(-w) - rhs) / np.maximum(1.0, np.abs(rhs))
    ))
    report.checks.append(_check(
        "Li2(z) + Li2(-z) = Li2(z^2)/2 for |z| <= 0.99",
        duplication <= rel,
        f"{duplication:.3g}",
    ))
    return report


def suite_convexity(alpha: float, settings: Settings) -> SuiteReport:
    report = SuiteReport("convexity")
    rho = np.linspace(0.0, 0.999, 100)
    theta = np.linspace(0.0, 2 * math.pi, 100, endpoint=False)
    z = (rho[:, None] * np.exp(1j * theta[None, :])).ravel()
    for p in CONVEXITY_SETS:
        low = float(np.min(complexfn.convexity_margin(p, z)))
        report.checks.append(_check(f"Re H > 0 for {p.as_dict()}", low > 0, f"min {low:.6g}"))
    return report


def suite_strips(alpha: float, settings: Settings) -> SuiteReport:
    report = SuiteReport("strips")
    sym = PsiParams.symmetric(1.0)
    inradius, outer = geometry.disk_radii(sym)
    report.checks.append(_check(
        "symmetric alpha = 1 inradius = pi/4",
        abs(inradius - math.pi / 4) <= 1e-12 and math.isinf(outer),
        f"{inradius:.15f}",
    ))
    for gamma in (math.pi / 6, math.pi / 4, HALF_PI):
        axes = geometry.domain_axes(PsiParams.conjugate(1.0, gamma))
        expected = gamma / (2.0 * math.sin(gamma))
        report.checks.append(_check(
            f"conjugate alpha = 1 inradius, gamma = {gamma:.6f}",
            abs(axes.k1 + axes.k - expected) <= 1e-12,
            f"{axes.k1 + axes.k:.15f}",
        ))
    return report


def suite_growth(alpha: float, settings: Settings) -> SuiteReport:
    report = SuiteReport("growth")
    worst = 0.0
    for p in GROWTH_SETS:
        for r in np.arange(1, 10) / 10.0:
            r = float(r)
            quad = oracle.integrate(partial(psi_over_t, p), 0.0, r, settings=settings)
            f_r = complexfn.extremal_eval(p, r, settings).real
            worst = max(worst, abs(f_r - r * math.exp(quad)))
    report.checks.append(_check("f(r) = r exp(int psi(t)/t)", worst <= 1e-10, f"{worst:.3g}"))

    cover = bounds.covering_constant(PsiParams.symmetric(1.0), settings)
    expected = math.exp(-math.pi ** 2 / 8)
    report.checks.append(_check(
        "covering constant at alpha = 1",
        abs(cover - expected) <= 1e-10,
        f"{cover:.15f}",
    ))
    return report


def suite_envelope(alpha: float, settings: Settings) -> SuiteReport:
    report = SuiteReport("envelope")
    params = [PsiParams.symmetric(alpha), PsiParams.conjugate(alpha, math.pi / 3)]
    probes = oracle.schwarz_probes(1000, seed=7)
    thetas = np.linspace(0.0, 2 * math.pi, 128, endpoint=False)

    for p in params:
        for r in (0.25, 0.5, 0.75, 0.99):
            env = bounds.envelope(p, r)
            _, re_max = oracle.max_on_circle(
                lambda t: complexfn.psi_eval(p, r * np.exp(1j * np.asarray(t)), settings).real,
                settings=settings,
            )
            report.checks.append(_check(
                f"reHi attained, {p.mode.value} r = {r}",
                abs(re_max - env.re_hi) <= 1e-8,
                f"{abs(re_max - env.re_hi):.3g}",
            ))

            z = r * np.exp(1j * thetas)
            values = np.concatenate([complexfn.psi_eval(p, w(z), settings) for w in probes])
            tol = 1e-12
            inside = (
                values.real.min() >= env.re_lo - tol
                and values.real.max() <= env.re_hi + tol
                and values.imag.min() >= env.im_lo - tol
                and values.imag.max() <= env.im_hi + tol
            )
            report.checks.append(_check(f"probes inside envelope, {p.mode.value} r = {r}", inside))
    return report


def _oracle_starlike_root(p: PsiParams, delta: float, settings: Settings) -> float:
    top = 1.0 - settings.boundary_eps

    def excess(r: float) -> float:
        return radii.min_re_on_circle(p, r, settings) - delta

    return oracle.find_root(excess, 1e-9, top, tol=1e-12, settings=settings).root


def suite_radii(alpha: float, settings: Settings) -> SuiteReport:
    report = SuiteReport("radii")
    p = PsiParams.symmetric(alpha)
    curves = {"booth": radii.booth_curve, "cissoid": radii.cissoid_curve}
    expected = {"booth": 0.7716, "cissoid": 0.5869}
    # Class parameters live in (0, 1)
    solvers = {"booth": radii.bs_radius, "cissoid": radii.cs_radius} if alpha < 1.0 else {}

    for kind, solve in solvers.items():
        result = solve(alpha, p, settings=settings)
        if alpha == 0.5:
            report.checks.append(_check(
                f"{kind} radius at alpha = 0.5",
                abs(result.value - expected[kind]) <= 0.005 and result.sharp,
                f"{result.value:.6f}",
            ))
        if result.sharp:
            domain = geometry.image_domain(p, 0.0, settings=settings)
            curve = curves[kind]
            reach = oracle.containment_radius(
                lambda r, t: curve(r * np.exp(1j * t), alpha), domain, settings=settings
            )
            report.checks.append(_check(
                f"{kind} containment oracle agrees",
                abs(reach - result.value) <= 5e-4,
                f"oracle {reach:.6f}",
            ))

    worst = 0.0
    for a in (0.25, 0.5, 0.75, 1.0):
        q = PsiParams.symmetric(a)
        for delta in (0.0, 0.25, 0.5, 0.75):
            closed = radii.starlike_radius(q, delta, settings).value
            worst = max(worst, abs(closed - _oracle_starlike_root(q, delta, settings)))
    report.checks.append(_check("starlike closed form = oracle root", worst <= 1e-6, f"{worst:.3g}"))

    r0 = radii.univalence_radius(p, settings).value
    ordered = all(radii.starlike_radius(p, d, settings).value <= r0 for d in (0.1, 0.4, 0.8))
    ordered = ordered and radii.ss_radius(p, 0.5, settings).value <= r0
    report.checks.append(_check("starlike and strong radii below univalence radius", ordered))
    return report


def suite_ellipse(alpha: float, settings: Settings) -> SuiteReport:
    report = SuiteReport("ellipse")
    thetas = np.linspace(0.0, 2 * math.pi, 512, endpoint=False)
    for a in (0.25, 0.5, 0.75):
        p = PsiParams.symmetric(a)
        deviation = geometry.ellipse_deviation(p, settings=settings)
        report.checks.append(_check(f"ellipse deviation at alpha = {a}", True, f"{deviation:.6g}", info=True))

        domain = geometry.image_domain(p, 0.0, settings=settings)
        boundary = complexfn.psi_eval(p, np.exp(1j * thetas), settings)
        agree = True
        for scale in (0.5, 0.9, 1.1, 1.5):
            pts = scale * boundary
            poly = geometry.polygon_margin(domain, pts)
            analytic = geometry.analytic_margin(domain, pts)
            decisive = np.abs(analytic) > 1e-3
            agree = agree and bool(np.all((poly[decisive] > 0) == (analytic[decisive] > 0)))
        report.checks.append(_check(f"polygon and ellipse verdicts agree at alpha = {a}", agree))
    return report


SUITES: Dict[str, Callable[[float, Settings], SuiteReport]] = {
    "gamma": suite_gamma,
    "coefficients": suite_coefficients,
    "convexity": suite_convexity,
    "strips": suite_strips,
    "growth": suite_growth,
    "envelope": suite_envelope,
    "radii": suite_radii,
    "ellipse": suite_ellipse,
}


def run_suites(name: str, alpha: float = 0.5, settings: Optional[Settings] = None) -> List[SuiteReport]:
    """Run one named suite, or every suite for ``all``."""
    settings = resolve(settings)
    names = list(SUITES) if name == "all" else [name]
    reports = []
    for suite in names:
        logger.debug("running suite %s", suite)
        reports.append(SUITES[suite](alpha, settings))
    return reports
