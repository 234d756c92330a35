"""Finite local pieces of the Stein-Farley complex.

The complex itself is infinite; everything here is a finite object built
around one vertex or one interval: cubes, descending links, relative links,
and bounded truncations for inspection.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .complexes import SimplicialComplex, check_isomorphism, discrete
from .forest import CARET, LEAF, Forest, enumerate_elementary_forests, is_elementary
from .groupoid import (
    FinitePoset,
    GroupoidElement,
    closed_interval,
    compose,
    elementary_le,
    enumerate_vertices,
    invert,
    le,
    open_interval,
    order_complex,
    split,
)
from .matching import matching_complex, path_graph


def level(x: GroupoidElement) -> int:
    return x.plus.root_count


def caret_roots(e: Forest) -> list[int]:
    """1-based root positions of the carets of an elementary forest."""
    return [i + 1 for i, t in enumerate(e.trees) if t == CARET]


def caret_edge(e: Forest) -> tuple[int, int]:
    """Leaf pair ``(i, i+1)`` under the single caret of ``e``."""
    (root,) = caret_roots(e)
    offset = sum(2 if t == CARET else 1 for t in e.trees[: root - 1])
    return (offset + 1, offset + 2)


def single_carets(e: Forest) -> list[Forest]:
    """The one-caret forests (same leaf count) whose carets make up ``e``."""
    out = []
    for r in caret_roots(e):
        offset = sum(2 if t == CARET else 1 for t in e.trees[: r - 1])
        out.append(merge_carets(e.leaf_count, [(offset + 1, offset + 2)]))
    return out


def merge_carets(n: int, edges) -> Forest:
    """Elementary forest with ``n`` leaves and carets over the given leaf pairs."""
    trees, i = [], 1
    starts = {u for u, _ in edges}
    while i <= n:
        if i in starts:
            trees.append(CARET)
            i += 2
        else:
            trees.append(LEAF)
            i += 1
    return Forest(tuple(trees))


# --- cubes ---------------------------------------------------------------------


@dataclass(frozen=True)
class Cube:
    bottom: GroupoidElement
    split: GroupoidElement

    def __post_init__(self):
        if not self.split.is_split() or not is_elementary(self.split.minus):
            raise ValueError(f"{self.split} is not an elementary split")
        if self.split.minus.root_count != self.bottom.level:
            raise ValueError("split arity does not match the bottom vertex level")

    @property
    def dim(self) -> int:
        return self.split.minus.caret_count

    @property
    def top(self) -> GroupoidElement:
        return compose(self.bottom, self.split)

    def vertices(self) -> FinitePoset:
        return closed_interval(self.bottom, self.top)


def cube(bottom: GroupoidElement, e: Forest) -> Cube:
    return Cube(bottom, split(e))


def cube_faces(c: Cube) -> list[Cube]:
    """Every face: each caret is fixed off (0), fixed on (1), or free (*)."""
    e = c.split.minus
    roots = caret_roots(e)
    faces = []
    for states in product("01*", repeat=len(roots)):
        choice = dict(zip(roots, states))
        applied, free = [], []
        for pos, t in enumerate(e.trees, start=1):
            if t == CARET and choice[pos] == "1":
                applied.append(CARET)
                free += [LEAF, LEAF]
            elif t == CARET and choice[pos] == "*":
                applied.append(LEAF)
                free.append(CARET)
            else:
                applied.append(LEAF)
                free.append(LEAF)
        bottom = compose(c.bottom, split(Forest(tuple(applied))))
        faces.append(Cube(bottom, split(Forest(tuple(free)))))
    return faces


def morse_check(c: Cube) -> bool:
    """Levels are naturals, change along every edge, and peak only at the top."""
    p = c.vertices()
    levels = [level(y) for y in p.elements]
    if any(lv < 1 for lv in levels):
        return False
    if any(levels[i] == levels[j] for i, j in p.covers()):
        return False
    top = max(levels)
    tops = [y for y, lv in zip(p.elements, levels) if lv == top]
    return tops == [c.top]


# --- descending links ------------------------------------------------------------


def descending_link(n: int) -> SimplicialComplex:
    """Abstract descending link of a level-``n`` vertex.

    Vertices are single-caret elementary forests with ``n`` leaves; an
    elementary forest with ``k+1`` carets contributes the ``k``-simplex of
    its single-caret parts.
    """
    if n < 2:
        return SimplicialComplex()
    simplices = [single_carets(e) for e in enumerate_elementary_forests(n) if e.caret_count]
    return SimplicialComplex(simplices)


def descending_link_at(x: GroupoidElement) -> SimplicialComplex:
    """Descending link of a concrete vertex; vertex labels are the lower
    neighbours ``x [1, e]`` for single-caret ``e``."""
    n = level(x)
    if n < 2:
        return SimplicialComplex()
    simplices = []
    for e in enumerate_elementary_forests(n):
        if e.caret_count == 0:
            continue
        simplices.append([compose(x, invert(split(s))) for s in single_carets(e)])
    return SimplicialComplex(simplices)


@dataclass
class SimplicialIsomorphism:
    mapping: dict
    bijective: bool
    forward: bool
    backward: bool

    @property
    def ok(self) -> bool:
        return self.bijective and self.forward and self.backward


def descending_link_iso(n: int) -> SimplicialIsomorphism:
    """Caret over leaves ``(i, i+1)`` goes to edge ``{i, i+1}`` of ``L_n``."""
    link = descending_link(n)
    target = matching_complex(path_graph(n))
    mapping = {v: caret_edge(v) for v in link.vertices}
    return SimplicialIsomorphism(mapping, **check_isomorphism(link, target, mapping))


# --- relative links ----------------------------------------------------------------


def relative_link(x: GroupoidElement, z: GroupoidElement) -> SimplicialComplex:
    """``|[x, z)| ∪ |(x, z]|`` for ``x < z`` with a non-elementary split."""
    s = le(x, z)
    if s is None or x == z:
        raise ValueError(f"{x} is not strictly below {z}")
    if is_elementary(s.minus):
        raise ValueError("relative link is only taken for non-elementary intervals")
    p = closed_interval(x, z)
    lower = p.subposet(i for i, y in enumerate(p.elements) if y != z)
    upper = p.subposet(i for i, y in enumerate(p.elements) if y != x)
    return order_complex(lower).union(order_complex(upper))


def suspension_of_interval(x: GroupoidElement, z: GroupoidElement) -> SimplicialComplex:
    return discrete([x, z]).join(order_complex(open_interval(x, z)))


# --- truncations -------------------------------------------------------------------


def truncated_subcomplex(max_leaves: int, max_level: int) -> SimplicialComplex:
    """Elementary chains on reduced vertices with bounded leaves and level.

    Inspection only: the real sublevel complexes are infinite.
    """
    verts = enumerate_vertices(max_leaves, max_level)
    by_level: dict[int, list] = {}
    for v in verts:
        by_level.setdefault(level(v), []).append(v)
    ups: dict = {v: set() for v in verts}
    for x in verts:
        for lv, ys in by_level.items():
            if lv <= level(x):
                continue
            for y in ys:
                if elementary_le(x, y):
                    ups[x].add(y)
    simplices = []

    def grow(chain):
        simplices.append(chain)
        last = chain[-1]
        for y in ups[last]:
            if all(y in ups[c] for c in chain):
                grow(chain + (y,))

    for v in verts:
        grow((v,))
    return SimplicialComplex.from_closed(tuple(sorted(s)) for s in simplices)


def elementary_simplex_ok(chain) -> bool:
    return all(elementary_le(a, b) for a, b in combinations(chain, 2))
