from fractions import Fraction

import pytest

from toricontact.classify import validate_datum
from toricontact.lattice import identity, matmul, transpose
from toricontact.polytope import LabeledFacet, LabeledPolytope
from toricontact.reduction import (
    SpherePresentation,
    build_beta,
    deformation_vector,
    kernel_torus_weights,
    reduced_polytope,
    synthesize,
    verify_presentation,
)
from toricontact.spheres import weighted_simplex

from oracles import small_kernel_vectors

F = Fraction


def standard_simplex_datum(dim=3):
    facets = tuple(
        LabeledFacet(tuple(-int(i == j) for j in range(dim)), 1) for i in range(dim)
    )
    return validate_datum(LabeledPolytope(dim, facets), tuple([1] * dim))


def cube_datum(label_first=2):
    """Labeled cube: [0,1]^3 at height 1 in ambient dimension 4."""
    facets = (
        LabeledFacet((-1, 0, 0, 0), label_first),
        LabeledFacet((0, -1, 0, 0), 1),
        LabeledFacet((0, 0, -1, 0), 1),
        LabeledFacet((1, 0, 0, -1), 1, F(0)),
        LabeledFacet((0, 1, 0, -1), 1, F(0)),
        LabeledFacet((0, 0, 1, -1), 1, F(0)),
    )
    return validate_datum(LabeledPolytope(4, facets), (0, 0, 0, 1))


class TestBuildBeta:
    def test_standard_simplex_gives_identity(self):
        assert build_beta(standard_simplex_datum()) == identity(3)

    def test_weighted_segment(self):
        beta = build_beta(weighted_simplex((1, 2)))
        assert beta == [[2, 0], [0, 1]]

    def test_cube_fixture(self):
        beta = build_beta(cube_datum())
        assert len(beta) == 4 and len(beta[0]) == 6
        cols = transpose(beta)
        assert cols[0] == [2, 0, 0, 0]
        assert cols[3] == [-1, 0, 0, 1]


class TestKernelTorusWeights:
    def test_sphere_base_case(self):
        assert kernel_torus_weights(identity(3)) == []

    def test_sum_of_basis_columns(self):
        beta = [[1, 0, 1], [0, 1, 1]]
        w = kernel_torus_weights(beta)
        assert w == [[1, 1, -1]]
        assert (1, 1, -1) in small_kernel_vectors(beta, 2)

    def test_cube_fixture(self):
        beta = build_beta(cube_datum())
        w = kernel_torus_weights(beta)
        assert len(w) == 2 and len(w[0]) == 6
        assert all(not any(row) for row in matmul(beta, transpose(w)))

    def test_not_surjective_rejected(self):
        with pytest.raises(ValueError, match="not surjective"):
            kernel_torus_weights([[1, 2], [2, 4]])


class TestDeformationVector:
    def test_standard_simplex(self):
        d = standard_simplex_datum()
        assert deformation_vector(d, build_beta(d)) == (1, 1, 1)

    def test_weighted_segment(self):
        d = weighted_simplex((1, 2))
        a = deformation_vector(d, build_beta(d))
        assert a == (F(1, 2), 2)

    def test_cube_positive_and_exact(self):
        d = cube_datum()
        beta = build_beta(d)
        a = deformation_vector(d, beta)
        assert all(x > 0 for x in a)
        image = [sum(row[j] * a[j] for j in range(6)) for row in beta]
        assert image == [0, 0, 0, 1]

    def test_deterministic(self):
        d = cube_datum()
        beta = build_beta(d)
        assert deformation_vector(d, beta) == deformation_vector(d, beta)


class TestSynthesize:
    def test_standard_simplex_is_the_sphere(self):
        pres = synthesize(standard_simplex_datum())
        assert pres.N == 3
        assert pres.weights == ()
        assert pres.deformation == (1, 1, 1)

    def test_weighted_segment(self):
        pres = synthesize(weighted_simplex((1, 2)))
        assert pres.N == 2
        assert pres.weights == ()
        assert pres.deformation == (F(1, 2), 2)

    def test_cube(self):
        pres = synthesize(cube_datum())
        assert pres.N == 6
        assert len(pres.weights) == 2
        assert all(x > 0 for x in pres.deformation)

    def test_base_case_iff_square(self):
        for d in [standard_simplex_datum(2), standard_simplex_datum(4)]:
            pres = synthesize(d)
            assert (pres.N == d.polytope.ambient_dim) == (pres.weights == ())


class TestReducedPolytope:
    def test_standard_round_trip(self):
        d = standard_simplex_datum()
        poly, reeb = reduced_polytope(synthesize(d))
        assert poly == d.polytope
        assert reeb == d.reeb

    def test_weighted_round_trip(self):
        d = weighted_simplex((1, 2))
        poly, reeb = reduced_polytope(synthesize(d))
        assert poly == d.polytope
        assert reeb == (1, 2)

    def test_cube_round_trip(self):
        d = cube_datum()
        poly, reeb = reduced_polytope(synthesize(d))
        got = validate_datum(poly, reeb)
        assert [v.coords for v in got.vertices] == [v.coords for v in d.vertices]


def hexagon_datum():
    """Hexagon with 6 facets in ambient dimension 3 (reeb = e_2)."""
    plane_normals = [(1, 0), (0, 1), (-1, 0), (0, -1), (1, 1), (-1, -1)]
    offsets = [2, 2, 2, 2, 3, 3]
    facets = tuple(
        LabeledFacet((v[0], v[1], 0), 1, F(off))
        for v, off in zip(plane_normals, offsets)
    )
    return validate_datum(LabeledPolytope(3, facets), (0, 0, 1))


class TestHexagonFixture:
    def test_beta_shape_and_surjectivity(self):
        from toricontact.lattice import rank

        beta = build_beta(hexagon_datum())
        assert len(beta) == 3 and len(beta[0]) == 6
        assert rank(beta) == 3

    def test_full_pipeline(self):
        d = hexagon_datum()
        pres = synthesize(d)
        assert len(pres.weights) == 3
        report = verify_presentation(pres, d)
        assert report.ok and report.polytope_match


class TestUnimodularConjugation:
    def test_beta_conjugates_and_verdicts_stable(self):
        import random

        from toricontact.lattice import det as idet

        rng = random.Random(4242)
        d = weighted_simplex((1, 2, 3))
        beta = build_beta(d)
        w = kernel_torus_weights(beta)
        n1 = 3
        u = identity(n1)
        for _ in range(6):
            i, j = rng.randrange(n1), rng.randrange(n1)
            if i == j:
                continue
            c = rng.randrange(-2, 3)
            for k in range(n1):
                u[i][k] += c * u[j][k]
        assert abs(idet(u)) == 1
        facets = tuple(
            LabeledFacet(
                tuple(sum(u[r][k] * f.normal[k] for k in range(n1)) for r in range(n1)),
                f.label,
                f.offset,
            )
            for f in d.polytope.facets
        )
        reeb2 = tuple(sum(u[r][k] * d.reeb[k] for k in range(n1)) for r in range(n1))
        d2 = validate_datum(LabeledPolytope(n1, facets), reeb2)
        beta2 = build_beta(d2)
        assert beta2 == matmul(u, beta)
        assert kernel_torus_weights(beta2) == w
        assert verify_presentation(synthesize(d2), d2).ok


class TestVerifyPresentation:
    def test_standard(self):
        d = standard_simplex_datum()
        report = verify_presentation(synthesize(d), d)
        assert report.ok and report.polytope_match and report.smooth

    def test_weighted_segment_smooth(self):
        d = weighted_simplex((1, 2))
        report = verify_presentation(synthesize(d), d)
        assert report.ok
        assert report.smooth  # no reduction torus: the sphere is a manifold

    def test_cube_orbifold_stabilizers(self):
        d = cube_datum()
        report = verify_presentation(synthesize(d), d)
        assert report.ok
        orders = {order for _, order in report.local_freeness}
        assert None not in orders
        assert 2 in orders  # label 2 facet leaves a Z_2 stabilizer corner
        assert not report.smooth

    def test_unlabeled_cube_smooth(self):
        d = cube_datum(label_first=1)
        report = verify_presentation(synthesize(d), d)
        assert report.ok and report.smooth

    def test_column_permutation_accepted(self):
        # a user-supplied presentation may list the sphere coordinates in a
        # different order; the classifying data agree up to ordering
        d = cube_datum()
        pres = synthesize(d)
        perm = [3, 0, 1, 2, 5, 4]
        cols = transpose([list(r) for r in pres.beta])
        beta = transpose([cols[j] for j in perm])
        weights = tuple(tuple(row[j] for j in perm) for row in pres.weights)
        a = tuple(pres.deformation[j] for j in perm)
        permuted = SpherePresentation(pres.N, tuple(map(tuple, beta)), weights, a)
        report = verify_presentation(permuted, d)
        assert report.ok and report.polytope_match

    def test_tampered_weight_detected(self):
        d = cube_datum()
        pres = synthesize(d)
        rows = [list(r) for r in pres.weights]
        rows[0][0] += 1
        bad = SpherePresentation(pres.N, pres.beta, tuple(map(tuple, rows)), pres.deformation)
        report = verify_presentation(bad, d)
        assert not report.ok
        assert any("weights" in p or "zero" in p for p in report.problems)

    def test_tampered_deformation_detected(self):
        d = weighted_simplex((1, 2))
        pres = synthesize(d)
        a = list(pres.deformation)
        a[0] += 1
        bad = SpherePresentation(pres.N, pres.beta, pres.weights, tuple(a))
        report = verify_presentation(bad, d)
        assert not report.ok

    def test_dimension_mismatch(self):
        d = standard_simplex_datum()
        pres = synthesize(weighted_simplex((1, 2)))
        with pytest.raises(ValueError, match="differ"):
            verify_presentation(pres, d)
