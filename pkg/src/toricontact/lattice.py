"""Exact integer linear algebra: normal forms, saturated lattices, quotients.

Everything here works on nested lists of plain Python ints, so coefficient
growth is absorbed by arbitrary precision and every identity (``H = M @ U``,
``S = U @ M @ V``, divisibility chains) holds exactly.  Matrices are
row-major: ``mat[i][j]`` is the entry in row ``i``, column ``j``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "FiniteAbelianGroup",
    "det",
    "hnf",
    "identity",
    "kernel_lattice_basis",
    "matmul",
    "matvec",
    "primitive",
    "quotient_group",
    "rank",
    "saturate",
    "snf",
    "transpose",
]

IntMat = list  # list of rows, each a list of ints


def _shape(mat) -> tuple[int, int]:
    if not mat or not mat[0]:
        raise ValueError("matrix must be nonempty")
    rows, cols = len(mat), len(mat[0])
    if any(len(row) != cols for row in mat):
        raise ValueError("matrix rows have inconsistent lengths")
    return rows, cols


def identity(n: int) -> IntMat:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(mat: IntMat) -> IntMat:
    return [list(col) for col in zip(*mat)]


def matmul(a: IntMat, b: IntMat) -> IntMat:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(mat: IntMat, vec) -> list:
    return [sum(x * y for x, y in zip(row, vec)) for row in mat]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with g = gcd(a, b) >= 0 and s*a + t*b = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def primitive(vec) -> list[int]:
    """Divide an integer vector by the gcd of its entries, keeping direction.

    >>> primitive([2, 4, 6])
    [1, 2, 3]
    >>> primitive((-3, 6))
    [-1, 2]
    """
    if not any(vec):
        raise ValueError("zero vector has no primitive representative")
    g = math.gcd(*vec)
    return [x // g for x in vec]


def det(mat: IntMat) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    rows, cols = _shape(mat)
    if rows != cols:
        raise ValueError("determinant requires a square matrix")
    a = [list(row) for row in mat]
    sign, prev = 1, 1
    for k in range(rows - 1):
        if a[k][k] == 0:
            for i in range(k + 1, rows):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, rows):
            for j in range(k + 1, rows):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[-1][-1]


def hnf(mat: IntMat) -> tuple[IntMat, IntMat]:
    """Column-style Hermite normal form.

    Returns (H, U) with H = mat @ U and U square unimodular.  H is in
    column echelon form: pivot columns come first, each pivot is positive,
    entries to the left of a pivot (in its row) are reduced into
    [0, pivot), and all columns beyond the last pivot are zero.
    """
    rows, cols = _shape(mat)
    h = [list(row) for row in mat]
    u = identity(cols)

    def col_combine(j1, j2, a11, a21, a12, a22):
        # (col_j1, col_j2) <- (a11*col_j1 + a21*col_j2, a12*col_j1 + a22*col_j2)
        for m in (h, u):
            for row in m:
                x, y = row[j1], row[j2]
                row[j1] = a11 * x + a21 * y
                row[j2] = a12 * x + a22 * y

    pivot_col = 0
    for row in range(rows):
        if pivot_col == cols:
            break
        for j in range(pivot_col + 1, cols):
            if h[row][j] == 0:
                continue
            a, b = h[row][pivot_col], h[row][j]
            g, s, t = _xgcd(a, b)
            col_combine(pivot_col, j, s, t, -(b // g), a // g)
        if h[row][pivot_col] == 0:
            continue
        if h[row][pivot_col] < 0:
            for m in (h, u):
                for r in m:
                    r[pivot_col] = -r[pivot_col]
        p = h[row][pivot_col]
        for j in range(pivot_col):
            q = h[row][j] // p  # floor division leaves a remainder in [0, p)
            if q:
                for m in (h, u):
                    for r in m:
                        r[j] -= q * r[pivot_col]
        pivot_col += 1
    return h, u


def rank(mat: IntMat) -> int:
    """Rank over the rationals (= number of pivot columns of the HNF)."""
    h, _ = hnf(mat)
    return sum(1 for j in range(len(h[0])) if any(row[j] for row in h))


def snf(mat: IntMat) -> tuple[IntMat, IntMat, IntMat]:
    """Smith normal form with transformations.

    Returns (S, U, V) with S = U @ mat @ V, S diagonal with nonnegative
    entries d_1 | d_2 | ... and U, V unimodular.
    """
    rows, cols = _shape(mat)
    s = [list(row) for row in mat]
    u = identity(rows)
    v = identity(cols)

    def row_combine(i1, i2, a11, a12, a21, a22):
        for m in (s, u):
            r1, r2 = m[i1], m[i2]
            m[i1] = [a11 * x + a12 * y for x, y in zip(r1, r2)]
            m[i2] = [a21 * x + a22 * y for x, y in zip(r1, r2)]

    def col_combine(j1, j2, a11, a21, a12, a22):
        for m in (s, v):
            for row in m:
                x, y = row[j1], row[j2]
                row[j1] = a11 * x + a21 * y
                row[j2] = a12 * x + a22 * y

    for t in range(min(rows, cols)):
        # Move the smallest nonzero entry of the trailing block to (t, t).
        piv = None
        for i in range(t, rows):
            for j in range(t, cols):
                if s[i][j] and (piv is None or abs(s[i][j]) < abs(s[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        if piv[0] != t:
            s[t], s[piv[0]] = s[piv[0]], s[t]
            u[t], u[piv[0]] = u[piv[0]], u[t]
        if piv[1] != t:
            for m in (s, v):
                for row in m:
                    row[t], row[piv[1]] = row[piv[1]], row[t]
        while True:
            for i in range(t + 1, rows):
                if s[i][t]:
                    a, b = s[t][t], s[i][t]
                    if b % a == 0:
                        row_combine(t, i, 1, 0, -(b // a), 1)
                    else:
                        g, x, y = _xgcd(a, b)
                        row_combine(t, i, x, y, -(b // g), a // g)
            for j in range(t + 1, cols):
                if s[t][j]:
                    a, b = s[t][t], s[t][j]
                    if b % a == 0:
                        col_combine(t, j, 1, 0, -(b // a), 1)
                    else:
                        g, x, y = _xgcd(a, b)
                        col_combine(t, j, x, y, -(b // g), a // g)
            if any(s[i][t] for i in range(t + 1, rows)):
                continue  # column ops disturbed the pivot column
            offender = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if s[i][j] % s[t][t]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_combine(t, offender, 1, 1, 0, 1)
        if s[t][t] < 0:
            s[t] = [-x for x in s[t]]
            u[t] = [-x for x in u[t]]
    return s, u, v


def _row_hnf_basis(mat: IntMat) -> IntMat:
    """Canonical basis (row HNF, zero rows dropped) of the row lattice."""
    h, _ = hnf(transpose(mat))
    return [list(row) for row in zip(*h) if any(row)]


def kernel_lattice_basis(mat: IntMat) -> IntMat:
    """Basis of the saturated integer kernel lattice of ``mat``.

    The rows of the result form a basis of ker(mat over Q) intersected
    with Z^cols; the quotient of Z^cols by their span is torsion free.
    Returns an empty list when the kernel is trivial.
    """
    rows, cols = _shape(mat)
    h, u = hnf(mat)
    rk = sum(1 for j in range(cols) if any(row[j] for row in h))
    basis = [[u[i][j] for i in range(cols)] for j in range(rk, cols)]
    if not basis:
        return []
    return _row_hnf_basis(basis)


def saturate(generators: IntMat) -> IntMat:
    """Basis of (rational span of the generator rows) intersected with Z^cols."""
    rows, cols = _shape(generators)
    annihilator = kernel_lattice_basis(generators)
    if not annihilator:
        return identity(cols)
    result = kernel_lattice_basis(annihilator)
    return result if result else []


def _coordinates_in_basis(basis: IntMat, vec) -> list[int] | None:
    """Integer coordinates of vec in the Z-span of the basis rows, or None."""
    bt = transpose(basis)
    h, u = hnf(bt)
    n_rows, n_cols = len(bt), len(bt[0])
    y = [0] * n_cols
    residual = list(vec)
    for j in range(n_cols):
        pivot_row = next((i for i in range(n_rows) if h[i][j]), None)
        if pivot_row is None:
            break
        if residual[pivot_row] % h[pivot_row][j]:
            return None
        q = residual[pivot_row] // h[pivot_row][j]
        y[j] = q
        if q:
            for i in range(n_rows):
                residual[i] -= q * h[i][j]
    if any(residual):
        return None
    return [sum(u[i][j] * y[j] for j in range(n_cols)) for i in range(n_cols)]


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Z_{d_1} x ... x Z_{d_k} x Z^r with 2 <= d_1 | d_2 | ... | d_k.

    Factors equal to 1 are never stored; the trivial group is
    ``FiniteAbelianGroup()``.
    """

    invariant_factors: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        for d in self.invariant_factors:
            if d < 2:
                raise ValueError("invariant factors must be at least 2")
        for a, b in zip(self.invariant_factors, self.invariant_factors[1:]):
            if b % a:
                raise ValueError("invariant factors must form a divisibility chain")

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors and self.free_rank == 0

    def order(self) -> int | None:
        """Group order, or None when the group is infinite."""
        if self.free_rank:
            return None
        return math.prod(self.invariant_factors)

    def __str__(self) -> str:
        parts = [f"C{d}" for d in self.invariant_factors]
        parts.extend("Z" for _ in range(self.free_rank))
        return " x ".join(parts) if parts else "trivial"


def quotient_group(ambient_basis: IntMat, sub_generators: IntMat) -> FiniteAbelianGroup:
    """The group (Z-span of ambient rows) / (Z-span of sub rows).

    Every sub generator must lie in the integer span of the ambient basis;
    lower rational rank of the sub lattice shows up as free rank.
    """
    a_rows, cols = _shape(ambient_basis)
    if rank(ambient_basis) != a_rows:
        raise ValueError("ambient basis rows must be linearly independent")
    if not sub_generators:
        return FiniteAbelianGroup((), a_rows)
    s_rows, s_cols = _shape(sub_generators)
    if s_cols != cols:
        raise ValueError("ambient and sub lattices live in different spaces")
    coords = []
    for gen in sub_generators:
        x = _coordinates_in_basis(ambient_basis, gen)
        if x is None:
            raise ValueError("subgroup not contained in ambient lattice")
        coords.append(x)
    s, _, _ = snf(coords)
    diag = [s[i][i] for i in range(min(len(coords), a_rows))]
    nonzero = [d for d in diag if d]
    return FiniteAbelianGroup(
        tuple(d for d in nonzero if d > 1), a_rows - len(nonzero)
    )
