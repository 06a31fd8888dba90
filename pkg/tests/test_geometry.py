"""Tests for image domains, containment and the disk criteria."""

import math

import numpy as np
import pytest

from psiab.core.errors import PreconditionError
from psiab.core.geometry import (
    analytic_margin,
    contains,
    disk_in_domain,
    disk_radii,
    domain_axes,
    ellipse_deviation,
    image_domain,
    janowski_admissible,
    janowski_member,
    measured_disk_radii,
    mobius_disk,
    polygon_margin,
)
from psiab.models.domain import Ellipse, HorizontalStrip, Method, VerticalStrip
from psiab.models.params import PsiParams


SYM_HALF = PsiParams.symmetric(0.5)
ROTATED = PsiParams.conjugate(0.5, math.pi / 2)


class TestDomainAxes:
    """Closed-form semi-axes."""

    def test_symmetric_half(self):
        axes = domain_axes(SYM_HALF)
        assert abs(axes.h1 - math.log(3.0)) < 1e-14
        assert abs(axes.h2 - math.atan(4.0 / 3.0)) < 1e-14

    def test_symmetric_strip(self):
        """alpha = 1: h1 diverges and h2 = pi/4."""
        axes = domain_axes(PsiParams.symmetric(1.0))
        assert math.isinf(axes.h1)
        assert abs(axes.h2 - math.pi / 4) < 1e-15
        assert not axes.finite

    def test_conjugate_right_angle(self):
        """gamma = pi/2 has k = 0, k1 = asin(0.8), k2 = log 3."""
        axes = domain_axes(ROTATED)
        assert abs(axes.k) < 1e-15
        assert abs(axes.k1 - math.asin(0.8)) < 1e-14
        assert abs(axes.k2 - math.log(3.0)) < 1e-14

    def test_conjugate_center_negative(self):
        """The ellipse center shifts left for gamma < pi/2."""
        assert domain_axes(PsiParams.conjugate(0.5, math.pi / 3)).k < 0.0


class TestImageDomain:
    """Sampled boundary and analytic variant."""

    def test_variants(self):
        assert isinstance(image_domain(SYM_HALF).variant, Ellipse)
        assert isinstance(image_domain(PsiParams.symmetric(1.0)).variant, HorizontalStrip)
        assert isinstance(image_domain(PsiParams.conjugate(1.0, 1.0)).variant, VerticalStrip)

    def test_polygon_read_only(self):
        d = image_domain(SYM_HALF)
        with pytest.raises(ValueError):
            d.polygon[0] = 0.0

    def test_counterclockwise(self):
        """Unwrapped boundary arguments increase by one full turn."""
        d = image_domain(PsiParams.conjugate(0.7, 1.0))
        assert np.all(np.diff(d.angles) > 0.0)
        assert d.angles[-1] - d.angles[0] < 2 * math.pi

    def test_convex(self):
        """Consecutive edges of a finite domain's polygon turn left."""
        for p in (SYM_HALF, PsiParams.conjugate(0.5, math.pi / 3), PsiParams.symmetric(0.9)):
            poly = image_domain(p).polygon
            edges = np.roll(poly, -1) - poly
            turns = edges.real * np.roll(edges, -1).imag - edges.imag * np.roll(edges, -1).real
            assert np.all(turns > -1e-15)

    def test_offset(self):
        d = image_domain(SYM_HALF, offset=1.0)
        assert d.anchor == 1.0
        assert abs(d.polygon[0] - (1.0 + math.log(3.0))) < 1e-8

    def test_too_few_samples(self):
        with pytest.raises(PreconditionError):
            image_domain(SYM_HALF, samples=32)


class TestContains:
    """Point containment."""

    def test_symmetric_ellipse(self):
        d = image_domain(SYM_HALF)
        assert contains(d, 0.0).inside
        assert contains(d, 0.5j).inside
        assert not contains(d, 1.2).inside
        assert not contains(d, 1.0j).inside

    def test_report_fields(self):
        report = contains(image_domain(SYM_HALF), 0.1 + 0.1j)
        assert report.method is Method.POLYGON
        assert report.margin > 0.0
        assert report.analytic_margin > 0.0
        assert report.methods_agree

    def test_strip_beyond_sampled_extent(self):
        """Far along a strip the strip inequality decides."""
        d = image_domain(PsiParams.symmetric(1.0))
        report = contains(d, 50.0 + 0.1j)
        assert report.method is Method.ANALYTIC
        assert report.inside
        assert not contains(d, 50.0 + 1.0j).inside

    def test_polygon_and_analytic_agree_off_boundary(self):
        """Verdicts agree at points well inside and well outside."""
        for p in (SYM_HALF, PsiParams.conjugate(0.5, math.pi / 3), PsiParams.symmetric(0.25)):
            d = image_domain(p)
            for scale in (0.5, 0.9, 1.1, 1.5):
                pts = scale * d.polygon[::64]
                poly = polygon_margin(d, pts)
                analytic = analytic_margin(d, pts)
                firm = np.abs(analytic) > 1e-3
                assert np.all((poly[firm] > 0) == (analytic[firm] > 0))


class TestDiskRadii:
    """Inscribed and circumscribed disks about the origin of psi(D)."""

    def test_symmetric_consistency(self):
        """Sampled min and max of |psi| match h2 and h1."""
        inner, outer = disk_radii(SYM_HALF)
        m_inner, m_outer = measured_disk_radii(SYM_HALF)
        assert abs(inner - m_inner) < 1e-9
        assert abs(outer - m_outer) < 1e-9

    def test_right_angle_consistency(self):
        inner, outer = disk_radii(ROTATED)
        m_inner, m_outer = measured_disk_radii(ROTATED)
        assert abs(inner - m_inner) < 1e-9
        assert abs(outer - m_outer) < 1e-9

    def test_strip_limits(self):
        """Inradius pi/4 and gamma/(2 sin gamma) at alpha = 1."""
        assert abs(disk_radii(PsiParams.symmetric(1.0))[0] - math.pi / 4) < 1e-12
        for gamma in (math.pi / 6, math.pi / 4, math.pi / 2):
            inner, outer = disk_radii(PsiParams.conjugate(1.0, gamma))
            assert abs(inner - gamma / (2.0 * math.sin(gamma))) < 1e-12
            assert math.isinf(outer)

    def test_ellipse_deviation_small(self):
        """The boundary is close to, but not exactly, the axis ellipse."""
        dev = ellipse_deviation(SYM_HALF)
        assert 0.0 < dev < 0.05

    def test_ellipse_deviation_needs_finite(self):
        with pytest.raises(PreconditionError):
            ellipse_deviation(PsiParams.symmetric(1.0))


class TestDiskCriterion:
    """D(a, r) inside 1 + psi(D)."""

    def test_inside_and_outside(self):
        assert disk_in_domain(SYM_HALF, 1.0, 0.9)
        assert not disk_in_domain(SYM_HALF, 1.0, 0.95)

    def test_shifted_center(self):
        assert disk_in_domain(SYM_HALF, 1.2, 0.7)
        assert not disk_in_domain(SYM_HALF, 1.2, 0.75)

    def test_right_angle_boundary_case(self):
        """a = 1 + k and r = k1 is admitted for gamma = pi/2."""
        axes = domain_axes(ROTATED)
        assert disk_in_domain(ROTATED, 1.0 + axes.k, axes.k1)

    def test_requires_one_inside(self):
        with pytest.raises(PreconditionError):
            disk_in_domain(SYM_HALF, 1.5, 0.2)


class TestJanowski:
    """Admissibility of (1 + Cz)/(1 + Dz)."""

    def test_mobius_disk(self):
        assert mobius_disk(0.5, 0.0) == (1.0, 0.5)
        center, radius = mobius_disk(0.5, -0.5)
        assert abs(center - 1.25 / 0.75) < 1e-15
        assert abs(radius - 1.0 / 0.75) < 1e-15

    def test_mobius_preconditions(self):
        with pytest.raises(PreconditionError):
            mobius_disk(0.2, 0.5)

    def test_symmetric(self):
        assert janowski_admissible(SYM_HALF, 0.5, 0.0)
        assert not janowski_admissible(SYM_HALF, 1.0, 0.0)

    def test_conjugate(self):
        assert janowski_admissible(ROTATED, 0.5, 0.0)
        assert not janowski_admissible(ROTATED, 0.95, 0.0)

    def test_admissible_disk_lies_in_domain(self):
        """Sampled boundaries of admissible Mobius disks fall inside 1 + psi(D)."""
        rng = np.random.default_rng(13)
        circle = np.exp(1j * np.linspace(0.0, 2 * math.pi, 64, endpoint=False))
        for p in (SYM_HALF, ROTATED):
            d = image_domain(p)
            axes = domain_axes(p)
            c, radius = (1.0, axes.h2) if p.is_symmetric else (1.0 + axes.k, axes.k1)
            checked = 0
            for _ in range(400):
                D = rng.uniform(-0.9, 0.9)
                C = rng.uniform(D + 1e-3, 1.0)
                a, r = mobius_disk(C, D)
                if not janowski_admissible(p, C, D) or radius - abs(a - c) - r < 1e-4:
                    continue
                checked += 1
                assert all(contains(d, w).inside for w in (a - 1.0) + r * circle)
            assert checked > 0

    def test_rejected_disk_leaves_inscribed_disk(self):
        """A rejected Mobius disk reaches past the criterion disk D(c, R)."""
        rng = np.random.default_rng(17)
        circle = np.exp(1j * np.linspace(0.0, 2 * math.pi, 256, endpoint=False))
        for p in (SYM_HALF, ROTATED):
            axes = domain_axes(p)
            c, radius = (1.0, axes.h2) if p.is_symmetric else (1.0 + axes.k, axes.k1)
            for _ in range(200):
                D = rng.uniform(-0.9, 0.9)
                C = rng.uniform(D + 1e-3, 1.0)
                a, r = mobius_disk(C, D)
                reach = np.max(np.abs(a + r * circle - c))
                if abs(reach - radius) < 1e-4:
                    continue
                assert janowski_admissible(p, C, D) == (reach < radius)

    def test_member_matches_admissible(self):
        for C, D in ((0.5, 0.0), (0.9, 0.2), (0.3, -0.4), (1.0, 0.0)):
            assert janowski_member(SYM_HALF, C, D) == janowski_admissible(SYM_HALF, C, D)

    def test_matches_disk_criterion(self):
        """The two-branch rule agrees with |a - c| + r <= R."""
        rng = np.random.default_rng(11)
        c, radius = 1.0, domain_axes(SYM_HALF).h2
        for _ in range(200):
            D = rng.uniform(-0.9, 0.9)
            C = rng.uniform(D + 1e-3, 1.0)
            a, r = mobius_disk(C, D)
            expected = abs(a - c) + r <= radius
            if abs(abs(a - c) + r - radius) > 1e-9:
                assert janowski_admissible(SYM_HALF, C, D) == expected
