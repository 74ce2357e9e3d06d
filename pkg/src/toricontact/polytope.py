"""Labeled rational polytopes in the characteristic hyperplane.

A labeled polytope is cut out by inequalities <alpha, m_i p_i> <= lambda_i
with p_i a primitive integer outward normal and m_i a positive integer
label.  The geometry of interest always lives in the slice
{alpha : <alpha, reeb> = 1}, so every operation here takes the
characteristic (Reeb) vector alongside the facet data.  The moment cone
is the homogenization of the same data; ``cone_over`` and ``slice_cone``
translate between the two pictures.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import geometry
from .lattice import kernel_lattice_basis

__all__ = [
    "LabeledFacet",
    "LabeledPolytope",
    "MomentCone",
    "Vertex",
    "cone_over",
    "contains",
    "faces_containing",
    "is_rational",
    "is_simple",
    "slice_cone",
    "vertices",
]


@dataclass(frozen=True)
class LabeledFacet:
    """One facet: outward primitive normal, positive integer label, offset.

    The facet inequality is <alpha, label * normal> <= offset.
    """

    normal: tuple[int, ...]
    label: int = 1
    offset: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "normal", tuple(int(x) for x in self.normal))
        object.__setattr__(self, "offset", Fraction(self.offset))
        if not any(self.normal):
            raise ValueError("facet normal must be nonzero")
        if gcd(*self.normal) != 1:
            raise ValueError("facet normal must be primitive")
        if self.label < 1:
            raise ValueError("facet label must be a positive integer")

    @property
    def functional(self) -> tuple[int, ...]:
        """The full cutting functional m * p."""
        return tuple(self.label * x for x in self.normal)


@dataclass(frozen=True)
class LabeledPolytope:
    ambient_dim: int
    facets: tuple[LabeledFacet, ...]

    def __post_init__(self):
        object.__setattr__(self, "facets", tuple(self.facets))
        if self.ambient_dim < 1:
            raise ValueError("ambient dimension must be positive")
        if len(self.facets) < self.ambient_dim:
            raise ValueError("a polytope needs at least ambient_dim facets")
        for f in self.facets:
            if len(f.normal) != self.ambient_dim:
                raise ValueError("facet normal has wrong dimension")
        seen = {}
        for i, f in enumerate(self.facets):
            key = (f.normal, Fraction(f.offset, f.label))
            if key in seen:
                raise ValueError(f"duplicate facet: indices {seen[key]} and {i}")
            seen[key] = i

    @property
    def dim(self) -> int:
        """Dimension of the polytope inside the characteristic hyperplane."""
        return self.ambient_dim - 1


@dataclass(frozen=True)
class Vertex:
    coords: tuple[Fraction, ...]
    active: frozenset[int]


@dataclass(frozen=True)
class MomentCone:
    """Homogeneous form {x : <x, label_i * q_i> >= 0} with q_i primitive."""

    ambient_dim: int
    normals: tuple[tuple[tuple[int, ...], int], ...]

    def rays(self):
        """(lineality basis, extreme rays) of the cone."""
        a_rows = [[-x for x in q] for q, _ in self.normals]
        return geometry.cone_rays(a_rows, self.ambient_dim)


def _reeb_fractions(reeb) -> list[Fraction]:
    return [Fraction(x) for x in reeb]


def _hyperplane_frame(poly: LabeledPolytope, reeb):
    """Base point and integer direction basis of {<alpha, reeb> = 1}."""
    r = _reeb_fractions(reeb)
    if len(r) != poly.ambient_dim:
        raise ValueError("characteristic vector has wrong dimension")
    if not any(r):
        raise ValueError("characteristic vector must be nonzero")
    scale = geometry.rational_to_primitive_int(r)
    base = [x / geometry.dot(r, r) for x in r]
    directions = kernel_lattice_basis([scale])
    return base, directions


def _in_plane_system(poly: LabeledPolytope, reeb):
    base, directions = _hyperplane_frame(poly, reeb)
    a_rows, b = [], []
    for f in poly.facets:
        y = f.functional
        a_rows.append([geometry.dot(d, y) for d in directions])
        b.append(f.offset - geometry.dot(base, y))
    return base, directions, a_rows, b


def _active_set(poly: LabeledPolytope, point) -> frozenset[int]:
    return frozenset(
        i
        for i, f in enumerate(poly.facets)
        if geometry.dot(point, f.functional) == f.offset
    )


def vertices(poly: LabeledPolytope, reeb) -> list[Vertex]:
    """All vertices of the polytope sliced by the characteristic hyperplane.

    Coordinates are exact rationals; each vertex carries the set of facets
    active at it.  Raises if the slice is empty or unbounded.
    """
    base, directions, a_rows, b = _in_plane_system(poly, reeb)
    status, uverts = geometry.enumerate_hpoly(a_rows, b)
    if status == "empty":
        raise ValueError("empty polytope")
    if status == "unbounded":
        raise ValueError("polytope unbounded in characteristic hyperplane")
    result = []
    for u in uverts:
        alpha = list(base)
        for coeff, d in zip(u, directions):
            for k in range(poly.ambient_dim):
                alpha[k] += coeff * d[k]
        coords = tuple(Fraction(x) for x in alpha)
        result.append(Vertex(coords, _active_set(poly, coords)))
    result.sort(key=lambda v: v.coords)
    return result


def is_simple(poly: LabeledPolytope, reeb) -> bool:
    """True when exactly dim facets meet at every vertex."""
    return all(len(v.active) == poly.dim for v in vertices(poly, reeb))


def is_rational(poly: LabeledPolytope, reeb) -> bool:
    """Facet data is integral by construction; this checks the Reeb vector."""
    return all(Fraction(x).denominator == 1 for x in reeb)


def contains(poly: LabeledPolytope, reeb, point) -> bool:
    if len(point) != poly.ambient_dim:
        raise ValueError("point has wrong dimension")
    p = [Fraction(x) for x in point]
    if geometry.dot(p, _reeb_fractions(reeb)) != 1:
        return False
    return all(geometry.dot(p, f.functional) <= f.offset for f in poly.facets)


def faces_containing(poly: LabeledPolytope, reeb, point) -> frozenset[int]:
    """Indices of the facets through a point of the polytope."""
    if not contains(poly, reeb, point):
        raise ValueError("point not in polytope")
    return _active_set(poly, [Fraction(x) for x in point])


def cone_over(poly: LabeledPolytope, reeb) -> MomentCone:
    """Homogenize to the moment cone: facet i becomes lambda_i*reeb - m_i*p_i.

    Each cone normal is decomposed as (positive label) * (primitive vector);
    the decomposition must be integral.
    """
    r = _reeb_fractions(reeb)
    normals = []
    for f in poly.facets:
        w = [f.offset * ri - yi for ri, yi in zip(r, f.functional)]
        if not any(w):
            raise ValueError("degenerate facet under coning")
        if any(x.denominator != 1 for x in w):
            raise ValueError("cone normal decomposition not integral")
        w_int = [int(x) for x in w]
        label = gcd(*w_int)
        normals.append((tuple(x // label for x in w_int), label))
    return MomentCone(poly.ambient_dim, tuple(normals))


def slice_cone(cone: MomentCone, reeb) -> LabeledPolytope:
    """Cut the cone by {<alpha, reeb> = 1}, keeping per-facet labels.

    Requires the new characteristic vector to be strictly positive on the
    cone (checked on lineality and every extreme ray), which also makes
    the resulting polytope compact.
    """
    r = [int(x) for x in reeb]
    if len(r) != cone.ambient_dim:
        raise ValueError("characteristic vector has wrong dimension")
    lineality, rays = cone.rays()
    if lineality:
        raise ValueError("characteristic vector not in interior of dual cone")
    for ray in rays:
        if geometry.dot(ray, r) <= 0:
            raise ValueError("characteristic vector not in interior of dual cone")
    facets = [
        LabeledFacet(tuple(-x for x in q), label, Fraction(0))
        for q, label in cone.normals
    ]
    return LabeledPolytope(cone.ambient_dim, tuple(facets))
