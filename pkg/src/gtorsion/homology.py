"""
Smith normal form over Z and first homology of finite presentations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .words import Presentation, Word

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(cols)] for i in range(len(a))]


def smith_normal_form(m: Matrix, ncols: int | None = None) -> tuple[Matrix, Matrix, Matrix]:
    """
    Return (U, D, V) with U m V = D, U and V unimodular, D diagonal with
    non-negative entries d_1 | d_2 | ...

    Pivot: smallest non-zero absolute value in the active block, ties broken
    by row-major position.  ``ncols`` is needed only for a matrix with no rows.
    """
    rows = len(m)
    cols = len(m[0]) if m else (ncols or 0)
    a = [list(r) for r in m]
    u, v = identity(rows), identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):  # row_dst -= q * row_src
        a[dst] = [x - q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):  # col_dst -= q * col_src
        for r in a:
            r[dst] -= q * r[src]
        for r in v:
            r[dst] -= q * r[src]

    for t in range(min(rows, cols)):
        while True:
            pivot = None
            for i in range(t, rows):
                for j in range(t, cols):
                    if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                return u, a, v
            swap_rows(t, pivot[0])
            swap_cols(t, pivot[1])
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, a[i][t] // p)
                    dirty |= a[i][t] != 0
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, a[t][j] // p)
                    dirty |= a[t][j] != 0
            if dirty:
                continue
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], -1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    return u, a, v


def diagonal(d: Matrix) -> list[int]:
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]


@dataclass(frozen=True)
class AbelianDecomposition:
    free_rank: int
    torsion: tuple[int, ...] = ()

    def __str__(self) -> str:
        parts = [f"Z/{t}" for t in self.torsion]
        if self.free_rank:
            parts.insert(0, "Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " + ".join(parts) or "0"


def relation_matrix(p: Presentation) -> Matrix:
    return [r.exponent_sums(p.ngens) for r in p.relators]


@lru_cache(maxsize=256)
def _snf(p: Presentation):
    u, d, v = smith_normal_form(relation_matrix(p), p.ngens)
    return u, diagonal(d), v


def abelianization(p: Presentation) -> AbelianDecomposition:
    _, diag, _ = _snf(p)
    nonzero = [x for x in diag if x]
    return AbelianDecomposition(p.ngens - len(nonzero), tuple(x for x in nonzero if x > 1))


def in_relation_lattice(p: Presentation, vec: list[int]) -> bool:
    """Is the exponent vector zero in H_1?"""
    _, diag, v = _snf(p)
    y = [sum(vec[k] * v[k][j] for k in range(p.ngens)) for j in range(p.ngens)]
    for j, yj in enumerate(y):
        d = diag[j] if j < len(diag) else 0
        if (d == 0 and yj != 0) or (d and yj % d):
            return False
    return True


def homology_class_is_zero(p: Presentation, g: Word) -> bool:
    return in_relation_lattice(p, g.exponent_sums(p.ngens))


def order2_necessary(p: Presentation, g: Word) -> bool:
    """
    2[g] = 0 in H_1.  False rules g out as an order-two generalized torsion
    element; True decides nothing.
    """
    return in_relation_lattice(p, [2 * x for x in g.exponent_sums(p.ngens)])
