"""Exact rational linear algebra and brute-force H-polyhedron enumeration.

Everything runs over ``fractions.Fraction`` (ints mix in transparently).
Vertex and ray enumeration work by exhaustive constraint-subset
intersection, which is exact and entirely adequate at the scale this
package targets (a few dozen constraints, dimension at most a handful).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd, lcm

__all__ = [
    "cone_rays",
    "dot",
    "enumerate_hpoly",
    "null_space",
    "rank_q",
    "rational_to_primitive_int",
    "row_space_basis",
    "solve_general",
    "solve_square",
]


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _rref(rows):
    """Reduced row echelon form; returns (reduced_nonzero_rows, pivot_cols)."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return [], []
    cols = len(m[0])
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank_q(rows) -> int:
    return len(_rref(rows)[0])


def row_space_basis(rows):
    return _rref(rows)[0]


def null_space(rows, dim: int):
    """Basis of {x in Q^dim : rows @ x = 0}."""
    reduced, pivots = _rref(rows)
    free = [c for c in range(dim) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * dim
        vec[f] = Fraction(1)
        for r, c in enumerate(pivots):
            vec[c] = -reduced[r][f]
        basis.append(vec)
    return basis


def solve_square(rows, rhs):
    """Unique solution of a square rational system, or None if singular."""
    n = len(rows)
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c]), None)
        if piv is None:
            return None
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [aug[i][n] for i in range(n)]


def solve_general(rows, rhs):
    """One solution of rows @ x = rhs with free variables set to 0, or None."""
    cols = len(rows[0])
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    reduced, pivots = _rref(aug)
    for row in reduced:
        if not any(row[:cols]) and row[cols]:
            return None
    x = [Fraction(0)] * cols
    for r, c in enumerate(pivots):
        if c == cols:
            return None
        x[c] = reduced[r][cols]
    return x


def rational_to_primitive_int(vec) -> list[int]:
    """Scale a nonzero rational vector to a primitive integer one (same ray)."""
    fracs = [Fraction(x) for x in vec]
    mult = lcm(*(f.denominator for f in fracs)) if fracs else 1
    ints = [int(f * mult) for f in fracs]
    g = gcd(*ints)
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    return [x // g for x in ints]


def _vertex_candidates(a_rows, b, dim):
    n = len(a_rows)
    seen = set()
    verts = []
    for subset in combinations(range(n), dim):
        x = solve_square([a_rows[i] for i in subset], [b[i] for i in subset])
        if x is None:
            continue
        if all(dot(a_rows[i], x) <= b[i] for i in range(n)):
            key = tuple(x)
            if key not in seen:
                seen.add(key)
                verts.append(key)
    return sorted(verts)


def _pointed_cone_rays(a_rows, dim):
    """Extreme rays of {y : A y <= 0}, assuming rank(A) = dim (pointed)."""
    n = len(a_rows)
    rays = []
    seen = set()
    for subset in combinations(range(n), dim - 1):
        sub = [a_rows[i] for i in subset]
        kernel = null_space(sub, dim)
        if len(kernel) != 1:
            continue
        y = kernel[0]
        for cand in (y, [-v for v in y]):
            if all(dot(row, cand) <= 0 for row in a_rows):
                key = tuple(rational_to_primitive_int(cand))
                if key not in seen:
                    seen.add(key)
                    rays.append(list(key))
                break
    return rays


def enumerate_hpoly(a_rows, b):
    """Vertices of the polyhedron {x : A x <= b}.

    Returns (status, vertices) where status is one of "empty", "bounded"
    or "unbounded".  Vertices (basic feasible points) are reported in
    lexicographic order even when the polyhedron is unbounded; a
    polyhedron that is nonempty but has no vertex reports none.
    """
    dim = len(a_rows[0]) if a_rows else 0
    if dim == 0:
        feasible = all(Fraction(x) >= 0 for x in b)
        return ("bounded", [()]) if feasible else ("empty", [])
    r = rank_q(a_rows)
    if r < dim:
        # Constraints only act on the span of their normals; feasibility is
        # decided there, and the orthogonal directions are free lines.
        basis = row_space_basis(a_rows)
        if not basis:
            feasible = all(Fraction(x) >= 0 for x in b)
            return ("unbounded", []) if feasible else ("empty", [])
        projected = [[dot(row, bas) for bas in basis] for row in a_rows]
        status, _ = enumerate_hpoly(projected, b)
        return ("empty", []) if status == "empty" else ("unbounded", [])
    verts = _vertex_candidates(a_rows, [Fraction(x) for x in b], dim)
    if not verts:
        return "empty", []
    if _pointed_cone_rays(a_rows, dim):
        return "unbounded", verts
    return "bounded", verts


def cone_rays(a_rows, dim: int):
    """Lineality basis and extreme rays of the cone {x : A x <= 0}.

    Extreme rays are returned as primitive integer vectors; they are only
    computed when the lineality space is trivial (pointed cone).
    """
    lineality = null_space(a_rows, dim)
    if lineality:
        return lineality, []
    return [], _pointed_cone_rays(a_rows, dim)
