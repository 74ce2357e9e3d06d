import math
from fractions import Fraction

import pytest

from toricontact.spheres import (
    SampleReport,
    WeightVector,
    convexity_sample_check,
    moment_eval,
    reeb_orbit_order,
    weighted_simplex,
)

F = Fraction


class TestWeightVector:
    def test_positive_required(self):
        with pytest.raises(ValueError, match="positive"):
            WeightVector((1, 0))

    def test_content(self):
        assert WeightVector((2, 4)).content == 2


class TestWeightedSimplex:
    def test_standard(self):
        d = weighted_simplex((1, 1, 1))
        assert d.reeb == (1, 1, 1)
        assert [f.label for f in d.facets] == [1, 1, 1]
        assert [f.normal for f in d.facets] == [(-1, 0, 0), (0, -1, 0), (0, 0, -1)]

    def test_one_two_labels(self):
        d = weighted_simplex((1, 2))
        assert [f.label for f in d.facets] == [2, 1]
        assert [v.coords for v in d.vertices] == [(0, F(1, 2)), (1, 0)]

    def test_larger_labels(self):
        d = weighted_simplex((2, 3, 5))
        assert [f.label for f in d.facets] == [1, 1, 1]
        d = weighted_simplex((4, 6, 9))
        assert [f.label for f in d.facets] == [3, 1, 2]

    def test_unnormalized_rejected(self):
        with pytest.raises(ValueError, match="gcd 2"):
            weighted_simplex((2, 2))


class TestMomentEval:
    def test_coordinate_point(self):
        assert moment_eval((1, 1, 1), (1, 0, 0, 0, 0, 0)) == [1.0, 0.0, 0.0]

    def test_weighted_coordinate_point(self):
        assert moment_eval((1, 2), (0, 0, 1, 0)) == [0.0, 0.5]

    def test_scale_invariance(self):
        z = (0.3, -1.2, 0.8, 0.1)
        a = (1, 2)
        mu1 = moment_eval(a, z)
        mu2 = moment_eval(a, tuple(3.0 * x for x in z))
        assert mu1 == pytest.approx(mu2, abs=1e-15)

    def test_weighted_sum_is_one(self):
        a = (1, 2, 3)
        z = (0.5, 1.0, -0.7, 0.2, 0.9, -0.4)
        mu = moment_eval(a, z)
        assert math.fsum(ai * mi for ai, mi in zip(a, mu)) == pytest.approx(1.0, abs=1e-12)

    def test_origin_rejected(self):
        with pytest.raises(ValueError, match="origin"):
            moment_eval((1, 2), (0, 0, 0, 0))


class TestConvexitySampleCheck:
    def test_standard_clean(self):
        report = convexity_sample_check((1, 1, 1), 2000, seed=11)
        assert report.ok
        assert report.max_facet_violation <= 1e-9
        assert report.max_hyperplane_deviation <= 1e-9

    def test_weighted_clean(self):
        report = convexity_sample_check((1, 2, 3), 2000, seed=23)
        assert report.ok

    def test_empty(self):
        report = convexity_sample_check((1, 2), 0, seed=0)
        assert report == SampleReport(0, 1e-9, 0.0, 0.0)

    def test_deterministic_in_seed(self):
        r1 = convexity_sample_check((1, 2), 500, seed=9)
        r2 = convexity_sample_check((1, 2), 500, seed=9)
        assert r1 == r2


class TestReebOrbitOrder:
    def test_half_period(self):
        assert reeb_orbit_order((1, 2), {1}) == 2

    def test_full_support_generic(self):
        assert reeb_orbit_order((1, 2), {0, 1}) == 1
        assert reeb_orbit_order((2, 3, 5), {0, 1, 2}) == 1

    def test_coprime_pair(self):
        assert reeb_orbit_order((2, 3, 5), {1, 2}) == 1
        assert reeb_orbit_order((2, 3, 5), {2}) == 5

    def test_empty_support(self):
        with pytest.raises(ValueError, match="nonempty"):
            reeb_orbit_order((1, 2), set())
