"""Synthesis and verification of sphere-reduction presentations.

Every valid datum with N facets is presented as a contact reduction of the
sphere S^{2N-1}: the columns of beta are the labeled inward normals of the
moment cone, the reduction torus is the saturated kernel of beta, and the
deformation vector a is a positive rational solution of beta @ a = reeb.
``reduced_polytope`` reads the datum back off a presentation, which turns
the presentation's correctness into an exact round-trip check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod

from . import geometry
from .classify import ToricContactDatum
from .lattice import kernel_lattice_basis, matmul, rank, snf, transpose
from .polytope import LabeledFacet, LabeledPolytope, cone_over
from .polytope import vertices as _poly_vertices

__all__ = [
    "SpherePresentation",
    "VerificationReport",
    "build_beta",
    "deformation_vector",
    "kernel_torus_weights",
    "reduced_polytope",
    "synthesize",
    "verify_presentation",
]


@dataclass(frozen=True)
class SpherePresentation:
    """Reduction data: the sphere S^{2N-1}, torus weights, deformation.

    beta has one column per sphere coordinate (shape (n+1) x N), weights
    is the (N-n-1) x N matrix of the reduction torus, and deformation is
    the positive rational vector with beta @ deformation = reeb.
    """

    N: int
    beta: tuple
    weights: tuple
    deformation: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "beta", tuple(tuple(int(x) for x in r) for r in self.beta))
        object.__setattr__(
            self, "weights", tuple(tuple(int(x) for x in r) for r in self.weights)
        )
        object.__setattr__(
            self, "deformation", tuple(Fraction(x) for x in self.deformation)
        )

    @property
    def ambient_dim(self) -> int:
        return len(self.beta)

    @property
    def reeb_image(self) -> tuple[Fraction, ...]:
        return tuple(
            sum(row[j] * self.deformation[j] for j in range(self.N))
            for row in self.beta
        )


@dataclass(frozen=True)
class VerificationReport:
    polytope_match: bool
    vertex_diff: tuple
    local_freeness: tuple  # per vertex: (coords, stabilizer order or None)
    smooth: bool
    problems: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return (
            self.polytope_match
            and not self.problems
            and all(order is not None for _, order in self.local_freeness)
        )


def build_beta(datum: ToricContactDatum) -> list[list[int]]:
    """Matrix whose i-th column is the labeled inward cone normal of facet i."""
    cone = cone_over(datum.polytope, datum.reeb)
    n1 = datum.polytope.ambient_dim
    beta = [
        [q[r] * label for q, label in cone.normals] for r in range(n1)
    ]
    if rank(beta) != n1:
        raise ValueError("beta not surjective")
    return beta


def kernel_torus_weights(beta) -> list[list[int]]:
    """Saturated basis of the integer kernel of beta (the reduction torus)."""
    if rank(beta) != len(beta):
        raise ValueError("beta not surjective")
    return kernel_lattice_basis(beta)


def deformation_vector(datum: ToricContactDatum, beta) -> tuple[Fraction, ...]:
    """Deterministic positive rational solution of beta @ a = reeb.

    Among all solutions (an affine space parallel to the kernel) the one
    maximizing the minimum coordinate is chosen, with exact ties broken by
    lexicographic order.  A positive solution exists for every valid datum.
    """
    reeb = list(datum.reeb)
    n_cols = len(beta[0])
    weights = kernel_torus_weights(beta)
    base = geometry.solve_general(beta, reeb)
    if base is None:
        raise ValueError("beta not surjective")
    if not weights:
        if any(x <= 0 for x in base):
            raise ValueError("no positive solution")
        return tuple(base)
    k = len(weights)
    # maximize z subject to base + W^T t >= z * ones, variables (t, z)
    a_rows = [[-weights[j][i] for j in range(k)] + [1] for i in range(n_cols)]
    rhs = [base[i] for i in range(n_cols)]
    status, verts = geometry.enumerate_hpoly(a_rows, rhs)
    if not verts:
        raise ValueError("no positive solution")
    best_z = max(v[-1] for v in verts)
    if best_z <= 0:
        raise ValueError("no positive solution")
    candidates = []
    for v in verts:
        if v[-1] != best_z:
            continue
        t = v[:-1]
        a = [
            base[i] + sum(weights[j][i] * t[j] for j in range(k))
            for i in range(n_cols)
        ]
        candidates.append(tuple(a))
    return min(candidates)


def _presentation_problems(pres: SpherePresentation) -> list[str]:
    problems = []
    n1 = pres.ambient_dim
    if any(len(row) != pres.N for row in pres.beta):
        problems.append("beta shape inconsistent with N")
        return problems
    if len(pres.deformation) != pres.N:
        problems.append("deformation length inconsistent with N")
        return problems
    expected_rows = pres.N - n1
    if len(pres.weights) != expected_rows or any(
        len(row) != pres.N for row in pres.weights
    ):
        problems.append("weight matrix shape inconsistent")
        return problems
    if rank(list(map(list, pres.beta))) != n1:
        problems.append("beta not surjective")
    if pres.weights:
        prod_mat = matmul(list(map(list, pres.beta)), transpose(list(map(list, pres.weights))))
        if any(any(row) for row in prod_mat):
            problems.append("beta @ weights^T is not zero")
        s, _, _ = snf(list(map(list, pres.weights)))
        diag = [s[i][i] for i in range(min(len(pres.weights), pres.N))]
        if any(d != 1 for d in diag):
            problems.append("weight matrix is not a saturated kernel basis")
    if any(x <= 0 for x in pres.deformation):
        problems.append("deformation vector not strictly positive")
    return problems


def synthesize(datum: ToricContactDatum) -> SpherePresentation:
    """Assemble the full presentation {N, beta, W, a} for a valid datum."""
    beta = build_beta(datum)
    weights = kernel_torus_weights(beta)
    a = deformation_vector(datum, beta)
    pres = SpherePresentation(
        N=len(datum.facets),
        beta=tuple(tuple(row) for row in beta),
        weights=tuple(tuple(row) for row in weights),
        deformation=a,
    )
    problems = _presentation_problems(pres)
    if pres.reeb_image != tuple(Fraction(x) for x in datum.reeb):
        problems.append("beta @ deformation differs from the characteristic vector")
    if problems:
        raise ValueError("synthesized presentation is inconsistent: " + "; ".join(problems))
    return pres


def reduced_polytope(pres: SpherePresentation):
    """Read the classifying data back off a presentation.

    Returns (polytope, reeb): the polytope cut out by <alpha, beta_i> >= 0
    in the hyperplane <alpha, beta @ a> = 1, with facet labels from the
    primitive decomposition of beta's columns.
    """
    cols = transpose(list(map(list, pres.beta)))
    facets = []
    for col in cols:
        if not any(col):
            raise ValueError("degenerate beta column")
        g = gcd(*col)
        facets.append(LabeledFacet(tuple(-(x // g) for x in col), g, Fraction(0)))
    poly = LabeledPolytope(pres.ambient_dim, tuple(facets))
    reeb = pres.reeb_image
    if all(x.denominator == 1 for x in reeb):
        reeb = tuple(int(x) for x in reeb)
    return poly, reeb


def _stabilizer_order(weights, support) -> int | None:
    """Order of the reduction-torus stabilizer on the given support, or None.

    The stabilizer of a point with coordinate support S is the kernel of
    T^k -> T^S induced by the support columns of W; it is finite exactly
    when those columns have full row rank and its order is the product of
    their invariant factors.
    """
    k = len(weights)
    if k == 0:
        return 1
    sub = [[row[i] for i in support] for row in weights]
    if rank(sub) < k:
        return None
    s, _, _ = snf(sub)
    return prod(s[i][i] for i in range(k))


def verify_presentation(
    pres: SpherePresentation, datum: ToricContactDatum
) -> VerificationReport:
    """Check a presentation against a datum, exactly.

    The polytope match compares vertex sets and cone-normal data (the
    latter is the facet data with offsets absorbed, so data that differ
    only by the hyperplane normalization still match).  Local freeness is
    checked at every vertex through the reduction-torus stabilizer.
    """
    if pres.ambient_dim != datum.polytope.ambient_dim:
        raise ValueError("presentation and datum dimensions differ")
    if pres.N != len(datum.facets):
        raise ValueError("presentation and datum facet counts differ")
    problems = _presentation_problems(pres)
    if pres.reeb_image != tuple(Fraction(x) for x in datum.reeb):
        problems.append("beta @ deformation differs from the characteristic vector")

    datum_vertices = [v.coords for v in datum.vertices]
    vertex_diff = []
    polytope_match = False
    reduced_verts = None
    try:
        poly, reeb = reduced_polytope(pres)
        reduced_verts = _poly_vertices(poly, reeb)
        reduced_coords = [v.coords for v in reduced_verts]
        missing = [c for c in datum_vertices if c not in reduced_coords]
        extra = [c for c in reduced_coords if c not in datum_vertices]
        vertex_diff = [("missing", c) for c in missing] + [("extra", c) for c in extra]
        cone = cone_over(datum.polytope, datum.reeb)
        datum_normals = sorted(cone.normals)
        pres_normals = sorted(
            (tuple(-x for x in f.normal), f.label) for f in poly.facets
        )
        polytope_match = not vertex_diff and datum_normals == pres_normals
        if datum_normals != pres_normals:
            problems.append("cone normals of presentation and datum differ")
    except ValueError as exc:
        problems.append(f"reduced polytope unavailable: {exc}")

    # stabilizer supports index the presentation's own columns, so read the
    # active sets off the reduced polytope; fall back to the datum's when the
    # reduction is too broken to slice (the report is already failing then)
    local = []
    for v in reduced_verts if reduced_verts is not None else datum.vertices:
        support = sorted(set(range(pres.N)) - set(v.active))
        order = _stabilizer_order(list(map(list, pres.weights)), support)
        local.append((v.coords, order))
    smooth = all(order == 1 for _, order in local)
    return VerificationReport(
        polytope_match=polytope_match,
        vertex_diff=tuple(vertex_diff),
        local_freeness=tuple(local),
        smooth=smooth,
        problems=tuple(problems),
    )
