"""Parameter model for the psi_{A,B} family."""

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from ..core.errors import PreconditionError


class Mode(str, Enum):
    """Admissible (A, B) configurations."""
    SYMMETRIC = "sym"
    CONJUGATE = "conj"


@dataclass(frozen=True)
class PsiParams:
    """The pair (A, B) in one of its two admissible configurations.

    Symmetric mode uses A = alpha, B = -alpha. Conjugate-pair mode uses
    A = alpha*exp(i*gamma), B = conj(A).
    """
    mode: Mode
    alpha: float
    gamma: Optional[float] = None

    def __post_init__(self):
        mode = Mode(self.mode)
        object.__setattr__(self, "mode", mode)
        if not (0.0 < self.alpha <= 1.0):
            raise PreconditionError(f"alpha must lie in (0, 1], got {self.alpha}")
        if mode is Mode.CONJUGATE:
            if self.gamma is None:
                raise PreconditionError("conjugate-pair mode needs gamma")
            if not (0.0 < self.gamma <= math.pi / 2 + 1e-15):
                raise PreconditionError(f"gamma must lie in (0, pi/2], got {self.gamma}")
        elif self.gamma is not None:
            object.__setattr__(self, "gamma", None)

    @classmethod
    def symmetric(cls, alpha: float) -> "PsiParams":
        """Build A = alpha, B = -alpha."""
        return cls(Mode.SYMMETRIC, alpha)

    @classmethod
    def conjugate(cls, alpha: float, gamma: float) -> "PsiParams":
        """Build A = alpha*e^{i gamma}, B = alpha*e^{-i gamma}."""
        return cls(Mode.CONJUGATE, alpha, gamma)

    @property
    def is_symmetric(self) -> bool:
        return self.mode is Mode.SYMMETRIC

    @property
    def A(self) -> complex:
        if self.is_symmetric:
            return complex(self.alpha, 0.0)
        return self.alpha * cmath.exp(1j * self.gamma)

    @property
    def B(self) -> complex:
        if self.is_symmetric:
            return complex(-self.alpha, 0.0)
        return self.A.conjugate()

    @property
    def a_minus_b(self) -> complex:
        """A - B, computed without cancellation."""
        if self.is_symmetric:
            return complex(2.0 * self.alpha, 0.0)
        return complex(0.0, 2.0 * self.alpha * math.sin(self.gamma))

    @property
    def scale(self) -> float:
        """|A - B|: 2*alpha, or 2*alpha*sin(gamma)."""
        return abs(self.a_minus_b)

    @property
    def finite(self) -> bool:
        """False when alpha = 1 and the image domain is a strip."""
        return self.alpha < 1.0

    def as_dict(self) -> dict:
        return {"mode": self.mode.value, "alpha": self.alpha, "gamma": self.gamma}
