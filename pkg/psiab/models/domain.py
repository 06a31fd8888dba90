"""Geometry models: shorthand axes, image domains and containment reports."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Union

import numpy as np

from .params import Mode


@dataclass(frozen=True)
class DomainAxes:
    """Shorthand constants of the image domain.

    Symmetric mode fills h1, h2; conjugate-pair mode fills k, k1, k2.
    Divergent axes (alpha = 1) are reported as ``math.inf``.
    """
    mode: Mode
    finite: bool
    h1: Optional[float] = None
    h2: Optional[float] = None
    k: Optional[float] = None
    k1: Optional[float] = None
    k2: Optional[float] = None

    def as_dict(self) -> dict:
        return {
            "mode": self.mode.value,
            "finite": self.finite,
            "h1": self.h1,
            "h2": self.h2,
            "k": self.k,
            "k1": self.k1,
            "k2": self.k2,
        }


@dataclass(frozen=True)
class Ellipse:
    center: float
    semi_real: float
    semi_imag: float
    kind: str = field(default="ellipse", init=False)


@dataclass(frozen=True)
class HorizontalStrip:
    v_lo: float
    v_hi: float
    kind: str = field(default="horizontal_strip", init=False)


@dataclass(frozen=True)
class VerticalStrip:
    u_lo: float
    u_hi: float
    kind: str = field(default="vertical_strip", init=False)


Variant = Union[Ellipse, HorizontalStrip, VerticalStrip]


@dataclass(frozen=True)
class ImageDomain:
    """The region offset + psi(D) with its analytic description and sampled boundary.

    ``polygon`` holds counterclockwise boundary samples as a read-only
    complex array; ``angles`` are their unwrapped arguments about
    ``anchor`` (an interior point) used for wedge lookup.
    """
    variant: Variant
    polygon: np.ndarray
    offset: float
    anchor: complex
    angles: np.ndarray
    thetas: np.ndarray

    @property
    def vertex_count(self) -> int:
        return int(self.polygon.size)


class Method(str, Enum):
    ANALYTIC = "analytic"
    POLYGON = "polygon"


@dataclass(frozen=True)
class ContainmentReport:
    """Containment verdict for a single point.

    ``margin`` is the authoritative polygon margin (positive inside);
    ``analytic_margin`` is the ellipse/strip inequality margin kept as a
    diagnostic.
    """
    inside: bool
    margin: float
    method: Method
    analytic_margin: float

    @property
    def methods_agree(self) -> bool:
        return (self.margin > 0) == (self.analytic_margin > 0)
