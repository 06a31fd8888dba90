"""Tests for the root, quadrature, circle-extremum and containment oracles."""

import math
from dataclasses import replace

import numpy as np
import pytest

from psiab.core.config import Settings
from psiab.core.errors import BracketError, IntegrationError, MonotonicityError, PreconditionError
from psiab.core.geometry import domain_axes, image_domain
from psiab.core.oracle import (
    containment_radius,
    find_root,
    integrate,
    max_on_circle,
    min_on_circle,
    schwarz_probes,
    sweep,
)
from psiab.core.radii import bs_radius, cs_radius, booth_curve, cissoid_curve
from psiab.models.params import PsiParams


SYM_HALF = PsiParams.symmetric(0.5)


class TestFindRoot:
    """Bracketed root finding."""

    def test_cosine(self):
        root = find_root(math.cos, 0.0, 3.0)
        assert abs(root.root - math.pi / 2) < 1e-11
        assert root.lo == 0.0 and root.hi == 3.0
        assert root.iterations > 0

    def test_root_at_endpoint(self):
        root = find_root(lambda x: x - 1.0, 0.0, 1.0)
        assert root.root == 1.0
        assert root.iterations == 0

    def test_no_sign_change(self):
        with pytest.raises(BracketError):
            find_root(lambda x: x * x + 1.0, -1.0, 1.0)


class TestIntegrate:
    """Adaptive quadrature."""

    def test_polynomial(self):
        assert abs(integrate(lambda x: x * x, 0.0, 1.0) - 1.0 / 3.0) < 1e-14

    def test_logarithmic_endpoint(self):
        """The integral of atanh(t)/t over [0, 1] is pi^2/8."""
        value = integrate(lambda t: math.atanh(t) / t, 0.0, 1.0, tol=1e-9)
        assert abs(value - math.pi ** 2 / 8) < 1e-8

    def test_budget_exhausted(self):
        tight = replace(Settings(), quad_limit=1)
        with pytest.raises(IntegrationError):
            integrate(lambda x: math.sin(50.0 * x), 0.0, 10.0, tol=1e-15, settings=tight)


class TestCircleExtrema:
    """Maximization and minimization over the circle."""

    def test_max_cosine(self):
        theta, value = max_on_circle(np.cos)
        assert abs(value - 1.0) < 1e-15
        assert abs(math.cos(theta) - 1.0) < 1e-12

    def test_min_cosine(self):
        theta, value = min_on_circle(np.cos)
        assert abs(value + 1.0) < 1e-15
        assert abs(theta - math.pi) < 1e-6

    def test_refines_off_grid(self):
        """A peak between grid points is found by the refinement step."""
        peak = 0.3 + math.pi / 4096
        _, value = max_on_circle(lambda t: -(np.asarray(t) - peak) ** 2, samples=64)
        assert value > -1e-12

    def test_scalar_function(self):
        _, value = max_on_circle(lambda t: math.sin(t))
        assert abs(value - 1.0) < 1e-12

    def test_too_few_samples(self):
        with pytest.raises(PreconditionError):
            max_on_circle(np.cos, samples=16)


class TestContainmentRadius:
    """Largest radius keeping a curve inside a domain."""

    def test_circle_in_ellipse(self):
        """Circles fit up to the smaller semi-axis."""
        d = image_domain(SYM_HALF)
        r = containment_radius(lambda r, t: r * np.exp(1j * t), d)
        assert abs(r - domain_axes(SYM_HALF).h2) < 5e-4

    def test_whole_disk(self):
        d = image_domain(SYM_HALF)
        assert containment_radius(lambda r, t: 0.1 * r * np.exp(1j * t), d) == 1.0

    def test_agrees_with_class_radii(self):
        d = image_domain(SYM_HALF)
        for fn, curve in ((bs_radius, booth_curve), (cs_radius, cissoid_curve)):
            closed = fn(0.5, SYM_HALF)
            oracle = containment_radius(lambda r, t: curve(r * np.exp(1j * t), 0.5), d)
            assert closed.sharp
            assert abs(oracle - closed.value) < 5e-4

    def test_rejects_growing_margin(self):
        d = image_domain(SYM_HALF)
        with pytest.raises(MonotonicityError):
            containment_radius(lambda r, t: 2.0 * (1.0 - r) * np.exp(1j * t), d)


class TestSweep:
    """Parameter sweeps."""

    def test_increasing(self):
        grid = sweep("x", 0.0, 1.0, 11, lambda x: x * x)
        assert grid.values[0] == 0.0 and grid.values[-1] == 1.0
        assert grid.is_increasing()

    def test_interior_points(self):
        grid = sweep("x", 0.0, 1.0, 4, lambda x: -x, endpoints=False)
        assert grid.values.size == 4
        assert 0.0 < grid.values[0] and grid.values[-1] < 1.0
        assert grid.is_decreasing()

    def test_preconditions(self):
        with pytest.raises(PreconditionError):
            sweep("x", 0.0, 1.0, 1, abs)
        with pytest.raises(PreconditionError):
            sweep("x", 1.0, 0.0, 5, abs)


class TestSchwarzProbes:
    """Random Schwarz functions."""

    def test_schwarz_property(self):
        rng = np.random.default_rng(5)
        z = np.sqrt(rng.random(200)) * np.exp(2j * np.pi * rng.random(200))
        for w in schwarz_probes(30, seed=1):
            assert w(0.0) == 0.0
            assert np.all(np.abs(w(z)) <= np.abs(z) + 1e-12)

    def test_deterministic(self):
        z = np.array([0.3 + 0.2j, -0.5j])
        first = [w(z) for w in schwarz_probes(5, seed=9)]
        second = [w(z) for w in schwarz_probes(5, seed=9)]
        for a, b in zip(first, second):
            assert np.array_equal(a, b)
