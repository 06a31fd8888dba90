"""Command-line run configuration."""

from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

from ..core.errors import PreconditionError
from .params import Mode, PsiParams


_PARAMS = ("mode", "alpha", "gamma")
_CLASS = ("alpha_class", "coupled")

# Options echoed in records, per command and per (command, target)
_COMMAND_FIELDS: Dict[str, Tuple[str, ...]] = {
    "eval": _PARAMS,
    "radius": _PARAMS,
    "verify": ("alpha",),
}
_TARGET_FIELDS: Dict[Tuple[str, str], Tuple[str, ...]] = {
    ("eval", "psi"): _PARAMS + ("z",),
    ("eval", "coeff"): _PARAMS + ("n",),
    ("eval", "dilog"): ("z",),
    ("eval", "extremal"): _PARAMS + ("z",),
    ("eval", "convexity"): _PARAMS + ("z",),
    ("eval", "domain"): _PARAMS + ("offset", "samples", "z"),
    ("eval", "radii"): _PARAMS + ("samples",),
    ("eval", "disk"): _PARAMS + ("center", "r"),
    ("eval", "admissible"): _PARAMS + ("C", "D"),
    ("eval", "envelope"): _PARAMS + ("r",),
    ("eval", "growth"): _PARAMS + ("r",),
    ("eval", "arg"): _PARAMS + ("r",),
    ("eval", "g"): ("alpha", "gamma"),
    ("eval", "thresholds"): ("alpha",),
    ("radius", "starlike"): _PARAMS + ("delta",),
    ("radius", "ss"): _PARAMS + ("beta",),
    ("radius", "bs"): _PARAMS + _CLASS,
    ("radius", "cs"): _PARAMS + _CLASS,
}


@dataclass
class RunConfig:
    """Parsed options for one command invocation."""
    command: str
    target: str
    mode: Optional[Mode] = None
    alpha: float = 0.5
    gamma: Optional[float] = None
    z: Optional[complex] = None
    n: int = 1
    r: Optional[float] = None
    delta: float = 0.0
    beta: float = 0.5
    alpha_class: Optional[float] = None
    coupled: bool = True
    C: Optional[float] = None
    D: Optional[float] = None
    center: Optional[float] = None
    offset: float = 0.0
    samples: Optional[int] = None
    grid: int = 50
    output: Optional[Path] = None
    format: str = "json"
    report: bool = False

    def validate(self) -> None:
        if self.samples is not None and self.samples < 64:
            raise PreconditionError(f"--samples must be >= 64, got {self.samples}")
        if self.grid < 2:
            raise PreconditionError(f"--grid must be >= 2, got {self.grid}")

    def params(self) -> PsiParams:
        """Build the family parameters; symmetric unless --mode says otherwise."""
        return PsiParams(Mode(self.mode or Mode.SYMMETRIC), self.alpha, self.gamma)

    def class_alpha(self) -> float:
        return self.alpha if self.alpha_class is None else self.alpha_class

    def inputs(self) -> Dict[str, Any]:
        """Set options that the command and target actually use."""
        names = _TARGET_FIELDS.get((self.command, self.target), _COMMAND_FIELDS.get(self.command, ()))
        data = {name: getattr(self, name) for name in names}
        if self.mode is not None and "mode" in data:
            data["mode"] = Mode(self.mode).value
        return {k: v for k, v in data.items() if v is not None}
