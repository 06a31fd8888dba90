"""Result value objects returned by bounds, radii and oracle computations."""

from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

import numpy as np


@dataclass(frozen=True)
class BoundEnvelope:
    """Real/imaginary part bounds of psi over the closed disk |z| <= r."""
    r: float
    re_lo: float
    re_hi: float
    im_lo: float
    im_hi: float
    eta: Optional[float] = None
    tau: Optional[float] = None
    T1: Optional[float] = None
    T2: Optional[float] = None

    def as_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class GrowthBounds:
    """Growth, ratio, derivative and length bounds at radius r."""
    r: float
    lower: float
    upper: float
    ratio_lower: float
    ratio_upper: float
    deriv_lower: float
    deriv_upper: float
    length_lower: float
    length_upper: float
    maxmod: float

    def as_dict(self) -> Dict[str, Any]:
        return asdict(self)


class Branch(str, Enum):
    CLOSED_FORM = "closed_form"
    ROOT_OF_EQ = "root_of_eq"
    WHOLE_DISK = "whole_disk"


@dataclass(frozen=True)
class RadiusResult:
    """A computed radius with its provenance and sharpness certificate."""
    value: float
    branch: Branch
    equation_residual: float
    sharp: bool
    sharpness_margin: float
    iterations: int
    provenance: str
    diagnostics: Dict[str, Any] = field(default_factory=dict)

    def as_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["branch"] = self.branch.value
        return data


@dataclass(frozen=True)
class GammaThresholds:
    gamma0: float
    gamma_prime: float
    g_star: float

    def as_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class BracketedRoot:
    lo: float
    hi: float
    root: float
    residual: float
    iterations: int


@dataclass(frozen=True)
class SweepGrid:
    """Evaluations of a scalar function on a strictly increasing grid."""
    name: str
    lo: float
    hi: float
    count: int
    values: np.ndarray
    evaluations: np.ndarray

    def is_increasing(self, strict: bool = True) -> bool:
        diffs = np.diff(self.evaluations)
        return bool(np.all(diffs > 0) if strict else np.all(diffs >= 0))

    def is_decreasing(self, strict: bool = True) -> bool:
        diffs = np.diff(self.evaluations)
        return bool(np.all(diffs < 0) if strict else np.all(diffs <= 0))


@dataclass
class CheckResult:
    """Outcome of one acceptance check."""
    name: str
    passed: bool
    detail: str = ""
    info: bool = False


@dataclass
class SuiteReport:
    suite: str
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)
