"""Command processing for the psiab command line."""

import logging
import math
from typing import Any, Callable, Dict, Tuple

import numpy as np

from ..core import bounds, complexfn, geometry, radii
from ..core.config import Settings
from ..core.errors import PreconditionError
from ..core.records import RecordWriter
from ..core.verification import BOUNDARY_SUPREMUM, SUITES, run_suites
from ..models.params import Mode, PsiParams
from ..models.run import RunConfig
from .display import Display

logger = logging.getLogger(__name__)

HALF_PI = math.pi / 2
TWO_PI = 2.0 * math.pi

EVAL_TARGETS = (
    "psi", "coeff", "dilog", "extremal", "convexity", "axes", "domain", "radii",
    "disk", "admissible", "envelope", "growth", "covering", "arg", "g", "thresholds",
)
RADIUS_KINDS = ("starlike", "univalence", "ss", "bs", "cs")
FIGURE_ALIASES = {
    "fig1": "extremal",
    "fig2": "order-surface",
    "fig3a": "booth",
    "fig3b": "cissoid",
}
FIGURE_IDS = ("extremal", "order-surface", "booth", "cissoid") + tuple(FIGURE_ALIASES)
VERIFY_SUITES = ("all",) + tuple(SUITES)

# Labels of the results each record relies on, emitted as ``paper_ref``
EVAL_REFERENCES = {
    "psi": "Eq. def1",
    "coeff": "Eq. cn",
    "dilog": "Li2 after Eq. extremal",
    "extremal": "Eq. extremal",
    "convexity": "convexity lemma, Re H(z) > 0",
    "axes": "shorthand constants h1, h2, k1, k2, k",
    "domain": "Eqs. ellipse and strip",
    "radii": "Lemma inc",
    "disk": "Eq. disc1",
    "admissible": "Lemma nonempty, conditions con1/con2",
    "envelope": "Theorem bounds",
    "growth": "growth lemma and M(r) corollary",
    "covering": "covering theorem, -f_{A,B}(-1)",
    "arg": "argument-bound corollary",
    "g": "Theorem rad, g(alpha, gamma)",
    "thresholds": "Theorems rad and rad1, gamma0 and gamma'",
}
RADIUS_REFERENCES = {
    "starlike": "Theorem rad, Eqs. r1/r2",
    "univalence": "Corollary cr, r0",
    "ss": "SS*(beta) corollary",
    "bs": "BS* theorem",
    "cs": "S*_cs theorem",
}
VERIFY_REFERENCE = "none"

EvalResult = Tuple[Any, str]


def _require(value, flag: str):
    if value is None:
        raise PreconditionError(f"{flag} is required for this target")
    return value


class CommandProcessor:
    """Runs the eval, radius, figure and verify commands."""

    def __init__(
        self,
        writer: RecordWriter,
        display: Display,
        settings: Settings,
    ):
        """Initialize the CommandProcessor.

        Args:
            writer (RecordWriter): Destination for records and curves
            display (Display): Console output
            settings (Settings): Settings in effect for this run
        """
        self.writer = writer
        self.display = display
        self.settings = settings
        self.commands: Dict[str, Callable[[RunConfig], int]] = {
            "eval": self.cmd_eval,
            "radius": self.cmd_radius,
            "figure": self.cmd_figure,
            "verify": self.cmd_verify,
        }
        self.eval_targets: Dict[str, Callable[[RunConfig], EvalResult]] = {
            name: getattr(self, f"_eval_{name}") for name in EVAL_TARGETS
        }

    def process_command(self, cfg: RunConfig) -> int:
        """Dispatch one command.

        Args:
            cfg (RunConfig): Parsed options

        Returns:
            int: Exit status
        """
        cfg.validate()
        handler = self.commands.get(cfg.command)
        if handler is None:
            raise PreconditionError(f"unknown command: {cfg.command}")
        logger.debug("running %s %s", cfg.command, cfg.target)
        return handler(cfg)

    def _emit(self, cfg: RunConfig, result: Any, provenance: str, reference: str) -> None:
        record = self.writer.build_record(
            f"{cfg.command} {cfg.target}", cfg.inputs(), result, provenance, reference
        )
        self.writer.write_record(record)

    # eval

    def cmd_eval(self, cfg: RunConfig) -> int:
        """Evaluate one quantity and emit it as a JSON record."""
        if cfg.format == "csv" and cfg.target != "domain":
            raise PreconditionError("csv output is available for 'eval domain' and figures only")
        result, provenance = self.eval_targets[cfg.target](cfg)
        if result is not None:
            self._emit(cfg, result, provenance, EVAL_REFERENCES[cfg.target])
        return 0

    def _eval_psi(self, cfg: RunConfig) -> EvalResult:
        z = _require(cfg.z, "--z")
        return {"value": complex(complexfn.psi_eval(cfg.params(), z, self.settings))}, \
            "log((1 + A z)/(1 + B z)) / (A - B)"

    def _eval_coeff(self, cfg: RunConfig) -> EvalResult:
        p = cfg.params()
        value = complexfn.psi_coeff(p, cfg.n)
        form = "alpha^(n-1)/n for odd n" if p.is_symmetric else "alpha^(n-1) sin(n gamma)/(n sin gamma)"
        return {"n": cfg.n, "value": value}, f"Taylor coefficient C_n = {form}"

    def _eval_dilog(self, cfg: RunConfig) -> EvalResult:
        z = _require(cfg.z, "--z")
        return {"value": complex(complexfn.dilog(z))}, \
            "Li2(z) = spence(1 - z)"

    def _eval_extremal(self, cfg: RunConfig) -> EvalResult:
        z = _require(cfg.z, "--z")
        value = complexfn.extremal_eval(cfg.params(), z, self.settings)
        return {"value": complex(value)}, "z exp((Li2(-B z) - Li2(-A z)) / (A - B))"

    def _eval_convexity(self, cfg: RunConfig) -> EvalResult:
        z = _require(cfg.z, "--z")
        return {"value": complexfn.convexity_margin(cfg.params(), z)}, \
            "Re(1 + z psi''/psi') = Re(-1 + 1/(1 + A z) + 1/(1 + B z))"

    def _eval_axes(self, cfg: RunConfig) -> EvalResult:
        return geometry.domain_axes(cfg.params()), "closed-form semi-axes of the image domain"

    def _eval_domain(self, cfg: RunConfig) -> EvalResult:
        p = cfg.params()
        d = geometry.image_domain(p, cfg.offset, cfg.samples, self.settings)
        if cfg.format == "csv":
            self.writer.write_curve("domain.csv", d.thetas, d.polygon)
            return None, ""

        result: Dict[str, Any] = {
            "variant": {"kind": d.variant.kind, **_fields(d.variant)},
            "vertex_count": d.vertex_count,
            "offset": d.offset,
        }
        if cfg.z is not None:
            result["containment"] = _fields(geometry.contains(d, cfg.z, self.settings))
        return result, "boundary psi((1 - eps) e^{i theta}) sampled counterclockwise"

    def _eval_radii(self, cfg: RunConfig) -> EvalResult:
        p = cfg.params()
        inner, outer = geometry.disk_radii(p)
        measured = geometry.measured_disk_radii(p, cfg.samples, self.settings)
        return {
            "inradius": inner,
            "circumradius": outer,
            "measured_min": measured[0],
            "measured_max": measured[1],
        }, "inscribed and circumscribed disks about 1 (closed form and sampled)"

    def _eval_disk(self, cfg: RunConfig) -> EvalResult:
        a = _require(cfg.center, "--center")
        r = _require(cfg.r, "--r")
        inside = geometry.disk_in_domain(cfg.params(), a, r, self.settings)
        return {"center": a, "r": r, "inside": inside}, \
            "|a - c| + r <= R against the inscribed disk D(c, R)"

    def _eval_admissible(self, cfg: RunConfig) -> EvalResult:
        C = _require(cfg.C, "--C")
        D = _require(cfg.D, "--D")
        p = cfg.params()
        center, radius = geometry.mobius_disk(C, D)
        return {
            "mobius_center": center,
            "mobius_radius": radius,
            "admissible": geometry.janowski_admissible(p, C, D, self.settings),
            "member": geometry.janowski_member(p, C, D, self.settings),
        }, "two-branch bound on C selected by the centre (1 - CD)/(1 - D^2)"

    def _eval_envelope(self, cfg: RunConfig) -> EvalResult:
        r = _require(cfg.r, "--r")
        return bounds.envelope(cfg.params(), r), "real and imaginary part bounds on |z| <= r"

    def _eval_growth(self, cfg: RunConfig) -> EvalResult:
        r = _require(cfg.r, "--r")
        return bounds.growth(cfg.params(), r, self.settings), \
            "growth sandwich -f(-r) <= |f| <= f(r) with derivative and length bounds"

    def _eval_covering(self, cfg: RunConfig) -> EvalResult:
        return {"value": bounds.covering_constant(cfg.params(), self.settings)}, \
            "-f_{A,B}(-1), radius of the covered disk"

    def _eval_arg(self, cfg: RunConfig) -> EvalResult:
        r = _require(cfg.r, "--r")
        return {"value": bounds.arg_bound(cfg.params(), r, self.settings)}, \
            "atan(num/den) bound on |arg(z f'/f)|"

    def _eval_g(self, cfg: RunConfig) -> EvalResult:
        gamma = _require(cfg.gamma, "--gamma")
        return {"value": radii.g_func(cfg.alpha, gamma)}, \
            "g = 1 - (eta - tau)/(2 alpha sin gamma) at r = 1"

    def _eval_thresholds(self, cfg: RunConfig) -> EvalResult:
        return radii.gamma_thresholds(cfg.alpha, self.settings), \
            "gamma0 from 2 sin gamma = pi - gamma, gamma' from g(alpha, gamma) = 0"

    # radius

    def cmd_radius(self, cfg: RunConfig) -> int:
        """Compute one radius and emit its RadiusResult."""
        p = cfg.params()
        kind = cfg.target
        if kind == "starlike":
            result = radii.starlike_radius(p, cfg.delta, self.settings)
        elif kind == "univalence":
            result = radii.univalence_radius(p, self.settings)
        elif kind == "ss":
            result = radii.ss_radius(p, cfg.beta, self.settings)
        elif kind == "bs":
            result = radii.bs_radius(cfg.class_alpha(), p, cfg.coupled, self.settings)
        else:
            result = radii.cs_radius(cfg.class_alpha(), p, cfg.coupled, self.settings)

        reference = RADIUS_REFERENCES[kind]
        if "formula" in result.diagnostics:
            reference = f"{reference}, {result.diagnostics['formula']}"
        self._emit(cfg, result, result.provenance, reference)
        self.display.show_radius(kind, result)
        return 0

    # figure

    def cmd_figure(self, cfg: RunConfig) -> int:
        """Write the CSV data behind one figure.

        Returns:
            int: 0, or 1 when the figure's containment check fails
        """
        figure = FIGURE_ALIASES.get(cfg.target, cfg.target)
        if figure == "extremal":
            passed, detail = self._figure_extremal(cfg)
        elif figure == "order-surface":
            passed, detail = self._figure_order_surface(cfg)
        else:
            passed, detail = self._figure_class(cfg, figure)

        self.display.show_files(figure, self.writer.written, passed, detail)
        return 0 if passed else 1

    def _thetas(self, cfg: RunConfig) -> np.ndarray:
        count = cfg.samples or self.settings.circle_samples
        return np.linspace(0.0, TWO_PI, count, endpoint=False)

    def _figure_extremal(self, cfg: RunConfig) -> Tuple[bool, str]:
        mode = cfg.mode or Mode.CONJUGATE
        gamma = cfg.gamma if cfg.gamma is not None else math.pi / 3
        p = PsiParams(mode, cfg.alpha, gamma)

        thetas = self._thetas(cfg)
        radius = 1.0 if p.finite else 1.0 - self.settings.boundary_eps
        circle = np.exp(1j * thetas)
        curve = complexfn.extremal_eval(p, radius * circle, self.settings)
        outer = float(complexfn.extremal_eval(p, radius, self.settings).real)
        inner = float(-complexfn.extremal_eval(p, -radius, self.settings).real)

        self.writer.write_curve("extremal_curve.csv", thetas, curve)
        self.writer.write_curve("extremal_outer.csv", thetas, outer * circle)
        self.writer.write_curve("extremal_inner.csv", thetas, inner * circle)

        moduli = np.abs(curve)
        passed = bool(np.all(np.isfinite(curve)))
        return passed, (
            f"circles {inner:.6f}, {outer:.6f}; sampled |f| in "
            f"[{moduli.min():.6f}, {moduli.max():.6f}]"
        )

    def _figure_order_surface(self, cfg: RunConfig) -> Tuple[bool, str]:
        n = cfg.grid
        alphas = np.arange(1, n + 1) / n
        gammas = np.arange(1, n + 1) * HALF_PI / n
        values = radii.g_func(alphas[:, None], gammas[None, :])
        self.writer.write_surface("order_surface.csv", alphas, gammas, values)

        top = float(np.max(values))
        return top <= BOUNDARY_SUPREMUM + 1e-9, f"max g = {top:.12f}"

    def _figure_class(self, cfg: RunConfig, kind: str) -> Tuple[bool, str]:
        p = cfg.params()
        alpha_class = cfg.class_alpha()
        radius_fn = radii.bs_radius if kind == "booth" else radii.cs_radius
        result = radius_fn(alpha_class, p, cfg.coupled, self.settings)

        thetas = self._thetas(cfg)
        r = min(result.value, 1.0 - self.settings.boundary_eps)
        points = radii.class_curve(kind)(r * np.exp(1j * thetas), alpha_class)
        domain = geometry.image_domain(p, 0.0, cfg.samples, self.settings)

        self.writer.write_curve(f"{kind}_curve.csv", thetas, points)
        self.writer.write_curve(f"{kind}_domain.csv", domain.thetas, domain.polygon)

        margin = float(np.min(geometry.polygon_margin(domain, points)))
        passed = margin >= -self.settings.sharpness_tol
        return passed, f"r = {result.value:.6f}, min margin {margin:.3g}"

    # verify

    def cmd_verify(self, cfg: RunConfig) -> int:
        """Run acceptance suites; exit 0 iff every check passes."""
        reports = run_suites(cfg.target, cfg.alpha, self.settings)
        self.display.show_suites(reports)
        if cfg.report:
            self._emit(
                cfg,
                [{"suite": r.suite, "checks": [_fields(c) for c in r.checks]} for r in reports],
                "acceptance suites",
                VERIFY_REFERENCE,
            )
        return 0 if all(r.passed for r in reports) else 1


def _fields(obj) -> Dict[str, Any]:
    return {k: v for k, v in vars(obj).items() if k != "kind"}
