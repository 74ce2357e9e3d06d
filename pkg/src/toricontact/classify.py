"""Toric contact data and their combinatorial invariants.

A datum is a labeled rational polytope together with the characteristic
(Reeb) vector whose hyperplane slice it lives in.  From it we read off,
per face of the polytope: the isotropy algebra (spanned by the primitive
facet normals through the face) and the leaf holonomy of the Reeb
foliation, a finite abelian group.

Holonomy is an invariant of the quotient by the Reeb circle, so it is
computed in the quotient lattice Z^{n+1} / Z*primitive(reeb): each facet
contributes label * primitive(image of its normal), and the group is the
saturated span of the images divided by the span of those generators.
Computing the same quotient upstairs in Z^{n+1} would miss contributions
at faces whose normal span is entangled with the Reeb direction (already
visible for weighted spheres), and would contradict the Reeb orbit-period
oracle; see the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import geometry
from .lattice import (
    FiniteAbelianGroup,
    matvec,
    primitive,
    quotient_group,
    saturate,
    snf,
)
from .polytope import LabeledFacet, LabeledPolytope, Vertex, cone_over, slice_cone
from .polytope import faces_containing as _poly_faces_containing
from .polytope import vertices as _poly_vertices

__all__ = [
    "ClassificationReport",
    "FaceInvariants",
    "ToricContactDatum",
    "classify",
    "holonomy",
    "isotropy_algebra",
    "perturb_reeb",
    "rescale",
    "validate_datum",
]


@dataclass(frozen=True)
class ToricContactDatum:
    """A validated (polytope, characteristic vector) pair.

    ``reeb`` holds ints in rational mode, Fractions in irrational mode.
    Construct through :func:`validate_datum`, which checks every invariant
    and caches the vertex list.
    """

    polytope: LabeledPolytope
    reeb: tuple
    mode: str
    vertices: tuple[Vertex, ...]

    @property
    def n(self) -> int:
        return self.polytope.dim

    @property
    def facets(self) -> tuple[LabeledFacet, ...]:
        return self.polytope.facets


@dataclass(frozen=True)
class FaceInvariants:
    face: frozenset[int]
    isotropy_basis: tuple[tuple[int, ...], ...]
    holonomy: FiniteAbelianGroup
    sample_point: tuple[Fraction, ...]


@dataclass(frozen=True)
class ClassificationReport:
    regularity: str  # "regular" or "quasi-regular"
    per_face: tuple[FaceInvariants, ...]
    sasakian_compatible: bool = True

    @property
    def nontrivial_faces(self) -> tuple[FaceInvariants, ...]:
        return tuple(f for f in self.per_face if not f.holonomy.is_trivial)


def validate_datum(
    poly: LabeledPolytope, reeb, mode: str = "rational"
) -> ToricContactDatum:
    """Check all datum invariants and return the validated datum.

    In rational mode the characteristic vector must be integral; the
    explicit irrational mode admits rational vectors but restricts the
    datum to vertex geometry (no holonomy or classification).
    """
    if mode not in ("rational", "irrational"):
        raise ValueError(f"unknown mode {mode!r}")
    r = [Fraction(x) for x in reeb]
    if len(r) != poly.ambient_dim:
        raise ValueError("characteristic vector has wrong dimension")
    if not any(r):
        raise ValueError("characteristic vector must be nonzero")
    integral = all(x.denominator == 1 for x in r)
    if not integral and mode == "rational":
        raise ValueError("characteristic vector not integral")
    stored = tuple(int(x) for x in r) if integral else tuple(r)
    actual_mode = "rational" if integral else "irrational"

    verts = _poly_vertices(poly, stored)
    for v in verts:
        if geometry.dot(v.coords, r) != 1:
            raise ValueError("vertex off characteristic hyperplane")
    n = poly.dim
    for v in verts:
        if len(v.active) != n:
            raise ValueError("polytope not simple")
    if n > 0:
        diffs = [
            [b - a for a, b in zip(verts[0].coords, v.coords)] for v in verts[1:]
        ]
        if not diffs or geometry.rank_q(diffs) != n:
            raise ValueError(
                "polytope not full-dimensional in the characteristic hyperplane"
            )
    span_rows = [list(f.functional) for f in poly.facets]
    span_rows.append([int(x) if actual_mode == "rational" else x for x in stored])
    if geometry.rank_q(span_rows) != poly.ambient_dim:
        raise ValueError("facet normals and characteristic vector do not span")
    return ToricContactDatum(poly, stored, actual_mode, tuple(verts))


def isotropy_algebra(datum: ToricContactDatum, point) -> list[tuple[int, ...]]:
    """Primitive facet normals through the point; empty for interior points."""
    active = _poly_faces_containing(datum.polytope, datum.reeb, point)
    return [datum.facets[i].normal for i in sorted(active)]


def _require_rational(datum: ToricContactDatum):
    if datum.mode != "rational":
        raise ValueError(
            "holonomy and classification need an integral characteristic vector"
        )


def _reeb_projection(datum: ToricContactDatum):
    """Matrix of Z^{n+1} -> Z^{n+1}/Z*primitive(reeb) in a chosen basis."""
    r0 = primitive(list(datum.reeb))
    s, u, _ = snf([[x] for x in r0])
    # u @ r0 = e_0 (up to sign, fixed below), so dropping the first row of u
    # is the quotient projection
    first = matvec(u, r0)
    assert first[0] in (1, -1) and not any(first[1:])
    return [list(row) for row in u[1:]]


def _face_vertices(datum: ToricContactDatum, face: frozenset) -> list[Vertex]:
    return [v for v in datum.vertices if face <= v.active]


def _barycenter(verts) -> tuple[Fraction, ...]:
    k = len(verts)
    dim = len(verts[0].coords)
    return tuple(
        sum((v.coords[i] for v in verts), Fraction(0)) / k for i in range(dim)
    )


def _check_face(datum: ToricContactDatum, face: frozenset) -> tuple[Fraction, ...]:
    """Sample point in the relative interior of the face; error if not a face."""
    verts = _face_vertices(datum, face)
    if not verts:
        raise ValueError("not a face")
    bary = _barycenter(verts)
    if _poly_faces_containing(datum.polytope, datum.reeb, bary) != face:
        raise ValueError("not a face")
    return bary


def _holonomy_from_projection(datum, proj, face) -> FiniteAbelianGroup:
    images = [matvec(proj, datum.facets[i].normal) for i in sorted(face)]
    ambient = saturate(images)
    generators = [
        [datum.facets[i].label * x for x in primitive(img)]
        for i, img in zip(sorted(face), images)
    ]
    return quotient_group(ambient, generators)


def holonomy(datum: ToricContactDatum, face) -> FiniteAbelianGroup:
    """Leaf holonomy group of the face with the given active facet set."""
    _require_rational(datum)
    face = frozenset(face)
    if not face:
        return FiniteAbelianGroup()
    _check_face(datum, face)
    return _holonomy_from_projection(datum, _reeb_projection(datum), face)


def classify(datum: ToricContactDatum) -> ClassificationReport:
    """Invariants for every face of the polytope, plus the regularity verdict.

    The face lattice of a simple polytope is exactly the family of subsets
    of vertex active sets; the whole polytope appears as the empty face.
    Regular means every leaf holonomy group is trivial and every label is 1.
    """
    _require_rational(datum)
    faces = {frozenset()}
    for v in datum.vertices:
        active = sorted(v.active)
        for mask in range(1, 1 << len(active)):
            faces.add(frozenset(active[i] for i in range(len(active)) if mask >> i & 1))
    proj = _reeb_projection(datum)
    per_face = []
    for face in sorted(faces, key=lambda f: (len(f), sorted(f))):
        sample = _barycenter(_face_vertices(datum, face))
        group = (
            FiniteAbelianGroup()
            if not face
            else _holonomy_from_projection(datum, proj, face)
        )
        per_face.append(
            FaceInvariants(
                face=face,
                isotropy_basis=tuple(datum.facets[i].normal for i in sorted(face)),
                holonomy=group,
                sample_point=sample,
            )
        )
    regular = all(f.holonomy.is_trivial for f in per_face) and all(
        f.label == 1 for f in datum.facets
    )
    return ClassificationReport(
        regularity="regular" if regular else "quasi-regular",
        per_face=tuple(per_face),
    )


def perturb_reeb(datum: ToricContactDatum, new_reeb) -> ToricContactDatum:
    """Reslice the moment cone with a new characteristic vector.

    Labels ride through the cone unchanged, facet by facet.  The new
    vector must be strictly positive on the cone.
    """
    _require_rational(datum)
    new_reeb = tuple(int(x) for x in new_reeb)
    cone = cone_over(datum.polytope, datum.reeb)
    return validate_datum(slice_cone(cone, new_reeb), new_reeb)


def rescale(datum: ToricContactDatum, c) -> ToricContactDatum:
    """Scale the polytope by c > 0 and the characteristic vector by 1/c.

    The hyperplane identity <v, reeb> = 1 is preserved.  When reeb/c is no
    longer integral the result comes back in irrational mode (its ``mode``
    field is the warning flag) and supports vertex geometry only.
    """
    c = Fraction(c)
    if c <= 0:
        raise ValueError("scale factor must be positive")
    facets = tuple(
        LabeledFacet(f.normal, f.label, c * f.offset) for f in datum.polytope.facets
    )
    new_reeb = tuple(Fraction(x) / c for x in datum.reeb)
    return validate_datum(
        LabeledPolytope(datum.polytope.ambient_dim, facets), new_reeb, mode="irrational"
    )
