"""Exact integral simplicial homology via Smith normal form.

Matrices are lists of lists of Python ints, so entries never overflow.
Simplices are oriented by their sorted vertex labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .complexes import SimplicialComplex

Matrix = list[list[int]]


@dataclass(frozen=True)
class HomologyGroup:
    degree: int
    betti: int
    torsion: tuple[int, ...] = ()

    def is_zero(self) -> bool:
        return self.betti == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.betti:
            parts.append("Z" if self.betti == 1 else f"Z^{self.betti}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) or "0"


@dataclass
class ChainComplex:
    """``bases[k]`` lists the k-simplices; ``boundaries[k]`` is the matrix of
    the map from degree k to degree k-1 (rows indexed by ``bases[k-1]``).

    In the reduced complex ``bases[-1] == [()]`` and ``boundaries[0]`` is the
    augmentation row of ones.
    """

    bases: dict[int, list[tuple]]
    boundaries: dict[int, Matrix]
    reduced: bool

    def boundary_squares_vanish(self) -> bool:
        for k in self.boundaries:
            if k - 1 in self.boundaries:
                prod = matmul(self.boundaries[k - 1], self.boundaries[k])
                if any(v for row in prod for v in row):
                    return False
        return True


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a or not b:
        return []
    cols = len(b[0])
    out = []
    for row in a:
        acc = [0] * cols
        for i, v in enumerate(row):
            if v:
                brow = b[i]
                for j in range(cols):
                    if brow[j]:
                        acc[j] += v * brow[j]
        out.append(acc)
    return out


def boundary_matrix(rows: Sequence[tuple], cols: Sequence[tuple]) -> Matrix:
    index = {s: i for i, s in enumerate(rows)}
    m = [[0] * len(cols) for _ in rows]
    for j, s in enumerate(cols):
        for i in range(len(s)):
            face = s[:i] + s[i + 1:]
            m[index[face]][j] += -1 if i % 2 else 1
    return m


def chain_complex(c: SimplicialComplex, reduced: bool = True) -> ChainComplex:
    top = c.dim
    bases = {k: c.simplices_of_dim(k) for k in range(top + 1)}
    if reduced:
        bases[-1] = [()]
    boundaries = {}
    for k in range(0 if reduced else 1, top + 1):
        boundaries[k] = boundary_matrix(bases[k - 1], bases[k])
    cc = ChainComplex(bases, boundaries, reduced)
    assert cc.boundary_squares_vanish(), "boundary of boundary is not zero"
    return cc


def smith_normal_form(m: Matrix) -> list[int]:
    """Invariant factors ``d_1 | d_2 | ... | d_r`` of an integer matrix.

    Elementary row and column operations, always pivoting on the entry of
    smallest absolute value in the remaining block.
    """
    a = [list(row) for row in m]
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    factors: list[int] = []
    t = 0
    while t < nrows and t < ncols:
        pivot = _smallest(a, t, t, nrows, ncols)
        if pivot is None:
            break
        _move(a, t, pivot)
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, nrows):
                if a[i][t]:
                    q = a[i][t] // p
                    if q:
                        ai, at = a[i], a[t]
                        for j in range(t, ncols):
                            ai[j] -= q * at[j]
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, ncols):
                if a[t][j]:
                    q = a[t][j] // p
                    if q:
                        for i in range(t, nrows):
                            a[i][j] -= q * a[i][t]
                    dirty = dirty or a[t][j] != 0
            if dirty:
                # a remainder smaller than the pivot survived in row or column t
                _move(a, t, _smallest_cross(a, t, nrows, ncols))
                continue
            bad = next(
                (i for i in range(t + 1, nrows) for j in range(t + 1, ncols) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            at, ab = a[t], a[bad]
            for j in range(t, ncols):
                at[j] += ab[j]
        factors.append(abs(a[t][t]))
        t += 1
    return factors


def _smallest(a, r0, c0, nrows, ncols):
    best = None
    for i in range(r0, nrows):
        row = a[i]
        for j in range(c0, ncols):
            v = row[j]
            if v and (best is None or abs(v) < best[0]):
                best = (abs(v), i, j)
                if best[0] == 1:
                    return best[1], best[2]
    return None if best is None else (best[1], best[2])


def _smallest_cross(a, t, nrows, ncols):
    cand = [(abs(a[i][t]), i, t) for i in range(t, nrows) if a[i][t]]
    cand += [(abs(a[t][j]), t, j) for j in range(t, ncols) if a[t][j]]
    _, i, j = min(cand)
    return i, j


def _move(a, t, pos):
    i, j = pos
    if i != t:
        a[t], a[i] = a[i], a[t]
    if j != t:
        for row in a:
            row[t], row[j] = row[j], row[t]


def rank(m: Matrix) -> int:
    return len(smith_normal_form(m))


def rational_rank(m: Matrix) -> int:
    """Rank over Q by fraction-exact Gaussian elimination (cross-check oracle)."""
    rows = [[Fraction(v) for v in row] for row in m]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(r + 1, len(rows)):
            if rows[i][c] != 0:
                f = rows[i][c] / rows[r][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def reduced_homology(c: SimplicialComplex) -> list[HomologyGroup]:
    """Reduced homology in degrees ``0 .. dim(c)``."""
    cc = chain_complex(c, reduced=True)
    top = c.dim
    snf = {k: smith_normal_form(m) for k, m in cc.boundaries.items()}
    out = []
    for k in range(top + 1):
        n_k = len(cc.bases[k])
        r_k = len(snf.get(k, ()))
        r_up = len(snf.get(k + 1, ()))
        torsion = tuple(d for d in snf.get(k + 1, ()) if d > 1)
        out.append(HomologyGroup(k, n_k - r_k - r_up, torsion))
    return out


def betti_numbers_rational(c: SimplicialComplex) -> list[int]:
    """Reduced Betti numbers from ranks over Q; independent of the SNF path."""
    cc = chain_complex(c, reduced=True)
    ranks = {k: rational_rank(m) for k, m in cc.boundaries.items()}
    return [
        len(cc.bases[k]) - ranks.get(k, 0) - ranks.get(k + 1, 0) for k in range(c.dim + 1)
    ]


def is_acyclic(homology: Sequence[HomologyGroup]) -> bool:
    return all(h.is_zero() for h in homology)


def connected_through(homology: Sequence[HomologyGroup]) -> int:
    """Largest ``k`` with reduced homology vanishing in every degree ``<= k``.

    ``-1`` when degree 0 is already non-zero; the top degree when everything
    vanishes.
    """
    k = -1
    for h in homology:
        if not h.is_zero():
            break
        k = h.degree
    return k


def is_homologically_k_connected(c: SimplicialComplex, k: int) -> bool:
    if c.is_empty():
        return False
    if k < 0:
        return True
    return all(h.is_zero() for h in reduced_homology(c)[: k + 1])


def reduced_euler_characteristic(homology: Sequence[HomologyGroup]) -> int:
    return sum((-1) ** h.degree * h.betti for h in homology)
