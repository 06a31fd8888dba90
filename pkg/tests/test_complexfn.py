"""Tests for psi_{A,B}, its coefficients, the dilogarithm and the extremal function."""

import math

import mpmath
import numpy as np
import pytest

from psiab.core.complexfn import (
    convexity_margin,
    dilog,
    extremal_eval,
    psi_coeff,
    psi_derivative,
    psi_eval,
    psi_series,
)
from psiab.core.errors import DomainError, PreconditionError
from psiab.core.oracle import integrate
from psiab.models.params import PsiParams


SYM_HALF = PsiParams.symmetric(0.5)
CONJ = PsiParams.conjugate(0.5, math.pi / 3)


class TestPsiEval:
    """Direct evaluation of psi."""

    def test_symmetric_at_one(self):
        """psi(1) = log 3 for A = -B = 1/2."""
        assert abs(psi_eval(SYM_HALF, 1.0) - math.log(3.0)) < 1e-14

    def test_normalization(self):
        """psi(0) = 0 and psi'(0) = 1."""
        for p in (SYM_HALF, CONJ, PsiParams.symmetric(1.0)):
            assert psi_eval(p, 0.0) == 0
            assert abs(psi_derivative(p, 0.0) - 1.0) < 1e-15

    def test_real_on_real_axis(self):
        """Conjugate-pair psi is real for real z."""
        t = np.linspace(-0.99, 0.99, 41)
        assert np.max(np.abs(psi_eval(CONJ, t).imag)) < 1e-15

    def test_rotated_symmetric_identity(self):
        """A = i/2 gives psi(z) = 2 atan(z/2)."""
        p = PsiParams.conjugate(0.5, math.pi / 2)
        z = np.array([0.3 + 0.4j, -0.7j, 0.9])
        assert np.max(np.abs(psi_eval(p, z) - 2.0 * np.arctan(z / 2.0))) < 1e-14

    def test_reflection_symmetry(self):
        """psi(conj z) = conj psi(z) on random points of the disk."""
        rng = np.random.default_rng(7)
        z = 0.999 * np.sqrt(rng.random(200)) * np.exp(2j * np.pi * rng.random(200))
        for p in (SYM_HALF, CONJ, PsiParams.conjugate(0.9, 1.4)):
            diff = np.abs(psi_eval(p, np.conj(z)) - np.conj(psi_eval(p, z)))
            assert np.max(diff) < 1e-14

    def test_array_shape(self):
        """Vectorised calls keep the input shape."""
        z = np.zeros((3, 4), dtype=complex)
        assert psi_eval(SYM_HALF, z).shape == (3, 4)

    def test_outside_disk(self):
        """|z| > 1 is rejected."""
        with pytest.raises(PreconditionError):
            psi_eval(SYM_HALF, 1.5)

    def test_branch_point(self):
        """alpha = 1 is singular at z = -1 and z = 1."""
        p = PsiParams.symmetric(1.0)
        with pytest.raises(DomainError):
            psi_eval(p, -1.0)
        with pytest.raises(DomainError):
            psi_eval(p, 1.0)


class TestCoefficients:
    """Taylor coefficients C_n."""

    def test_first_coefficient(self):
        assert psi_coeff(SYM_HALF, 1) == 1.0
        assert psi_coeff(CONJ, 1) == 1.0

    def test_symmetric_even_vanish(self):
        """Symmetric C_n = 0 for even n and alpha^(n-1)/n for odd n."""
        assert psi_coeff(SYM_HALF, 2) == 0.0
        assert psi_coeff(SYM_HALF, 10) == 0.0
        assert abs(psi_coeff(SYM_HALF, 3) - 0.25 / 3) < 1e-16

    def test_conjugate_second(self):
        """C_2 = alpha cos(gamma) for the conjugate pair."""
        assert abs(psi_coeff(CONJ, 2) - 0.5 * math.cos(math.pi / 3)) < 1e-15

    def test_modulus_bound(self):
        """|C_n| <= alpha^(n-1) for n <= 100."""
        for p in (SYM_HALF, CONJ, PsiParams.conjugate(0.9, 0.1)):
            for n in range(1, 101):
                assert abs(psi_coeff(p, n)) <= p.alpha ** (n - 1) + 1e-15

    def test_invalid_index(self):
        with pytest.raises(PreconditionError):
            psi_coeff(SYM_HALF, 0)

    def test_series_matches_direct(self):
        """Truncated series agrees with the closed form inside |z| <= 0.9."""
        rng = np.random.default_rng(3)
        z = 0.9 * np.sqrt(rng.random(50)) * np.exp(2j * np.pi * rng.random(50))
        for p in (SYM_HALF, CONJ, PsiParams.symmetric(1.0)):
            diff = np.abs(psi_series(p, z, terms=400) - psi_eval(p, z))
            assert np.max(diff) < 1e-12


class TestDilog:
    """Dilogarithm against closed values and mpmath."""

    def test_special_values(self):
        assert abs(dilog(1.0) - math.pi ** 2 / 6) < 1e-15
        assert abs(dilog(-1.0) + math.pi ** 2 / 12) < 1e-14
        expected = math.pi ** 2 / 12 - math.log(2.0) ** 2 / 2
        assert abs(dilog(0.5) - expected) < 1e-14

    def test_against_mpmath(self, settings):
        """Relative error within the dilog tolerance across every region of the plane."""
        points = [
            0.1 + 0.2j, -0.4, 0.7 + 0.1j, 0.95j, -0.99 + 0.05j,
            complex(math.cos(math.pi / 3), math.sin(math.pi / 3)),
            complex(math.cos(math.pi / 3), -math.sin(math.pi / 3)),
            0.5 + 0.8j, 2.0 + 1.0j, -3.0, -0.5 - 1.5j, 1.0 + 1e-3j,
        ]
        for z in points:
            expected = complex(mpmath.polylog(2, mpmath.mpc(z.real, z.imag)))
            got = dilog(z)
            assert abs(got - expected) <= settings.dilog_rel_tol * max(1.0, abs(expected)), z

    def test_duplication_identity(self, settings):
        """Li2(z) + Li2(-z) = Li2(z^2)/2 for |z| <= 0.99."""
        rng = np.random.default_rng(5)
        z = 0.99 * np.sqrt(rng.random(100)) * np.exp(2j * np.pi * rng.random(100))
        rhs = dilog(z * z) / 2.0
        err = np.abs(dilog(z) + dilog(-z) - rhs) / np.maximum(1.0, np.abs(rhs))
        assert np.max(err) <= settings.dilog_rel_tol

    def test_vectorised(self):
        z = np.array([0.2, -0.3 + 0.4j, 1.0])
        out = dilog(z)
        assert out.shape == (3,)
        assert abs(out[2] - math.pi ** 2 / 6) < 1e-15

    def test_branch_cut(self):
        with pytest.raises(DomainError):
            dilog(2.0)


class TestExtremal:
    """Extremal function f_{A,B}."""

    def test_normalization(self):
        """f(z)/z -> 1 as z -> 0."""
        assert abs(extremal_eval(CONJ, 1e-8) / 1e-8 - 1.0) < 1e-7

    def test_growth_identity(self):
        """f(r) = r exp(integral of psi(t)/t over [0, r])."""
        for p in (SYM_HALF, CONJ, PsiParams.symmetric(1.0)):
            for r in (0.1, 0.5, 0.9):
                log_ratio = integrate(lambda t: psi_eval(p, t).real / t if t else 1.0, 0.0, r)
                expected = r * math.exp(log_ratio)
                assert abs(extremal_eval(p, r) - expected) < 1e-10

    def test_covering_value(self):
        """-f(-1) = exp(-pi^2/8) for A = -B = 1."""
        p = PsiParams.symmetric(1.0)
        assert abs(-extremal_eval(p, -1.0).real - math.exp(-math.pi ** 2 / 8)) < 1e-10


class TestConvexity:
    """Convexity margin Re(1 + z psi''/psi')."""

    def test_positive_on_polar_grid(self):
        radii = np.linspace(0.0, 0.999, 100)
        angles = np.linspace(0.0, 2 * np.pi, 100, endpoint=False)
        z = radii[:, None] * np.exp(1j * angles[None, :])
        for p in (SYM_HALF, CONJ, PsiParams.conjugate(0.99, 0.2), PsiParams.symmetric(0.99)):
            assert np.min(convexity_margin(p, z)) > 0.0

    def test_reference_value(self):
        """H(0.9) = -1 + 1/1.45 + 1/0.55 for A = -B = 1/2."""
        assert abs(convexity_margin(SYM_HALF, 0.9) - 1.507837) < 1e-6

    def test_needs_open_disk(self):
        with pytest.raises(PreconditionError):
            convexity_margin(SYM_HALF, 1.0)
