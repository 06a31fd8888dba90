"""Complex special functions behind the psi_{A,B} family.

All functions accept a complex scalar or an array-like of complex
points and return the same shape. Logarithms are principal-branch and
are always applied to the single quotient (1+Az)/(1+Bz).
"""

import logging
import math
from typing import Optional, Union

import numpy as np
from numpy.polynomial import polynomial as npoly
from scipy.special import spence

from ..models.params import PsiParams
from .config import Settings, resolve
from .errors import DomainError, PreconditionError

logger = logging.getLogger(__name__)

ArrayLike = Union[complex, float, np.ndarray]


def _as_points(z: ArrayLike):
    arr = np.asarray(z, dtype=complex)
    return arr, arr.ndim == 0


def _unwrap(out: np.ndarray, scalar: bool):
    return complex(out) if scalar else out


def _check_closed_disk(z: np.ndarray, settings: Settings) -> None:
    if np.any(np.abs(z) > 1.0 + settings.function_tol):
        raise PreconditionError("psi is only defined for |z| <= 1")


def psi_eval(p: PsiParams, z: ArrayLike, settings: Optional[Settings] = None):
    """Evaluate psi_{A,B}(z) = log((1+Az)/(1+Bz)) / (A-B).

    Args:
        p (PsiParams): Family parameters
        z (complex or array): Points with |z| <= 1

    Returns:
        complex or ndarray: psi values, same shape as ``z``

    Raises:
        PreconditionError: if some |z| > 1
        DomainError: at a branch point (alpha = 1 and 1+Az or 1+Bz vanishes)
    """
    settings = resolve(settings)
    arr, scalar = _as_points(z)
    _check_closed_disk(arr, settings)

    num = 1.0 + p.A * arr
    den = 1.0 + p.B * arr
    if np.any(num == 0) or np.any(den == 0):
        raise DomainError("psi evaluated at a branch point")

    out = np.log(num / den) / p.a_minus_b
    return _unwrap(out, scalar)


def psi_derivative(p: PsiParams, z: ArrayLike, settings: Optional[Settings] = None):
    """psi'(z) = 1 / ((1+Az)(1+Bz))."""
    settings = resolve(settings)
    arr, scalar = _as_points(z)
    _check_closed_disk(arr, settings)
    den = (1.0 + p.A * arr) * (1.0 + p.B * arr)
    if np.any(den == 0):
        raise DomainError("psi' evaluated at a branch point")
    return _unwrap(1.0 / den, scalar)


def psi_coeff(p: PsiParams, n: int) -> float:
    """Taylor coefficient C_n = (A^n - B^n) / (n (A - B)).

    The expansion is psi(z) = sum (-1)^(n+1) C_n z^n. Conjugate-pair
    coefficients use alpha^(n-1) sin(n gamma) / (n sin gamma), which is
    exactly real and free of cancellation near gamma = 0.

    Args:
        p (PsiParams): Family parameters
        n (int): Coefficient index, n >= 1

    Returns:
        float: C_n
    """
    if int(n) != n or n < 1:
        raise PreconditionError(f"coefficient index must be a positive integer, got {n}")
    n = int(n)
    if n == 1:
        return 1.0
    if p.is_symmetric:
        return 0.0 if n % 2 == 0 else p.alpha ** (n - 1) / n
    return p.alpha ** (n - 1) * math.sin(n * p.gamma) / (n * math.sin(p.gamma))


def psi_series(p: PsiParams, z: ArrayLike, terms: int = 200):
    """Truncated Taylor sum of psi, used as an independent check."""
    arr, scalar = _as_points(z)
    coeffs = np.zeros(terms + 1)
    for n in range(1, terms + 1):
        coeffs[n] = (-1) ** (n + 1) * psi_coeff(p, n)
    return _unwrap(npoly.polyval(arr, coeffs), scalar)


def dilog(z: ArrayLike):
    """Principal-branch dilogarithm Li2(z) = sum z^n / n^2.

    Evaluated as ``spence(1 - z)``; scipy's Spence function is Li2(1 - w).

    Raises:
        DomainError: for real z > 1 (the branch cut)
    """
    arr, scalar = _as_points(z)
    if np.any((arr.imag == 0) & (arr.real > 1.0)):
        raise DomainError("dilog evaluated on the branch cut (1, inf)")
    out = spence(1.0 - arr)
    return _unwrap(out, scalar)


def extremal_eval(p: PsiParams, z: ArrayLike, settings: Optional[Settings] = None):
    """Extremal function f_{A,B}(z) = z exp((Li2(-Bz) - Li2(-Az)) / (A-B)).

    Args:
        p (PsiParams): Family parameters
        z (complex or array): Points with |z| <= 1

    Returns:
        complex or ndarray: f_{A,B}(z)
    """
    settings = resolve(settings)
    arr, scalar = _as_points(z)
    _check_closed_disk(arr, settings)
    exponent = (dilog(-p.B * arr) - dilog(-p.A * arr)) / p.a_minus_b
    return _unwrap(arr * np.exp(exponent), scalar)


def convexity_margin(p: PsiParams, z: ArrayLike):
    """Re H(z) with H = 1 + z psi''/psi' = -1 + 1/(1+Az) + 1/(1+Bz).

    Positive on the open disk whenever alpha < 1.
    """
    arr, scalar = _as_points(z)
    if np.any(np.abs(arr) >= 1.0):
        raise PreconditionError("convexity margin needs |z| < 1")
    h = -1.0 + 1.0 / (1.0 + p.A * arr) + 1.0 / (1.0 + p.B * arr)
    return float(h.real) if scalar else h.real
