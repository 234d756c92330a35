"""The groupoid of forest pairs, splits, and the poset of vertices.

Elements are reduced pairs ``[minus | plus]`` of forests with equal leaf
counts.  ``compose(a, b)`` is defined when ``a.plus`` and ``b.minus`` have
the same number of roots.  A *vertex* is an element whose minus forest is a
single tree; its level is the number of roots of the plus forest.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .complexes import SimplicialComplex
from .forest import (
    Forest,
    ParseError,
    elementary_core,
    enumerate_forests,
    enumerate_trees,
    forests_below,
    is_elementary,
    is_expansion_of,
    minimal_common_expansion,
    reduce_pair,
    replay,
)
from .thompson import GroupElement


class CompositionError(ValueError):
    """Raised when two groupoid elements have incompatible arities."""


@dataclass(frozen=True, order=True)
class GroupoidElement:
    minus: Forest
    plus: Forest

    def __str__(self) -> str:
        return f"[{self.minus}|{self.plus}]"

    def __repr__(self) -> str:
        return f"GroupoidElement({str(self)!r})"

    @property
    def source(self) -> int:
        return self.minus.root_count

    @property
    def target(self) -> int:
        return self.plus.root_count

    @property
    def level(self) -> int:
        return self.plus.root_count

    def is_vertex(self) -> bool:
        return self.minus.root_count == 1

    def is_split(self) -> bool:
        return self.plus.is_trivial()

    def is_identity(self) -> bool:
        return self.minus.is_trivial() and self.plus.is_trivial()

    def to_group_element(self) -> GroupElement:
        if self.source != 1 or self.target != 1:
            raise ValueError(f"{self} is not an element of F")
        return GroupElement(self.minus.trees[0], self.plus.trees[0])


def element(minus: Forest, plus: Forest) -> GroupoidElement:
    """Reduced groupoid element with the given representative."""
    a, b = reduce_pair(minus, plus)
    return GroupoidElement(a, b)


def identity(n: int) -> GroupoidElement:
    one = Forest.trivial(n)
    return GroupoidElement(one, one)


def split(f: Forest) -> GroupoidElement:
    """The split ``[f, 1]``; already reduced since ``1`` has no carets."""
    return GroupoidElement(f, Forest.trivial(f.leaf_count))


def from_group(g: GroupElement) -> GroupoidElement:
    return GroupoidElement(Forest.of_tree(g.minus), Forest.of_tree(g.plus))


def compose(a: GroupoidElement, b: GroupoidElement) -> GroupoidElement:
    if a.target != b.source:
        raise CompositionError(
            f"cannot compose {a} (target {a.target}) with {b} (source {b.source})"
        )
    middle = minimal_common_expansion(a.plus, b.minus)
    left = replay(a.minus, is_expansion_of(middle, a.plus))
    right = replay(b.plus, is_expansion_of(middle, b.minus))
    return element(left, right)


def invert(a: GroupoidElement) -> GroupoidElement:
    return GroupoidElement(a.plus, a.minus)


def act(g: GroupElement, x: GroupoidElement) -> GroupoidElement:
    """Left action of F on vertices."""
    return compose(from_group(g), x)


# --- the orders --------------------------------------------------------------


def le(x: GroupoidElement, y: GroupoidElement) -> Optional[GroupoidElement]:
    """The split ``s`` with ``y == x s``, or None if ``x`` is not below ``y``."""
    if x.source != y.source:
        return None
    s = compose(invert(x), y)
    return s if s.is_split() else None


def elementary_le(x: GroupoidElement, y: GroupoidElement) -> bool:
    s = le(x, y)
    return s is not None and is_elementary(s.minus)


def upper_bound(x: GroupoidElement) -> GroupoidElement:
    """``[t, 1]`` above the vertex ``x = [t, f]``."""
    return split(x.minus)


def common_upper_bound(x: GroupoidElement, y: GroupoidElement) -> GroupoidElement:
    if not (x.is_vertex() and y.is_vertex()):
        raise ValueError("common upper bounds are taken between vertices")
    return split(minimal_common_expansion(x.minus, y.minus))


# --- finite posets -----------------------------------------------------------


@dataclass(frozen=True)
class FinitePoset:
    """Explicit finite poset: ``leq[i][j]`` iff ``elements[i] <= elements[j]``."""

    elements: tuple
    leq: tuple = field(repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, e) -> int:
        return self.elements.index(e)

    def less(self, i: int, j: int) -> bool:
        return i != j and self.leq[i][j]

    def covers(self) -> list[tuple[int, int]]:
        """Pairs ``(i, j)`` with ``i < j`` and nothing strictly between."""
        n = len(self.elements)
        out = []
        for i in range(n):
            for j in range(n):
                if self.less(i, j) and not any(
                    self.less(i, k) and self.less(k, j) for k in range(n)
                ):
                    out.append((i, j))
        return out

    def chains(self) -> list[tuple[int, ...]]:
        """All non-empty chains, as increasing index tuples."""
        n = len(self.elements)
        ups = [[j for j in range(n) if self.less(i, j)] for i in range(n)]
        out: list[tuple[int, ...]] = []

        def extend(chain):
            out.append(chain)
            for j in ups[chain[-1]]:
                extend(chain + (j,))

        for i in range(n):
            extend((i,))
        return out

    def subposet(self, keep: Iterable[int]) -> "FinitePoset":
        keep = list(keep)
        return FinitePoset(
            tuple(self.elements[i] for i in keep),
            tuple(tuple(self.leq[i][j] for j in keep) for i in keep),
        )

    def is_partial_order(self) -> bool:
        n = len(self.elements)
        r = self.leq
        if not all(r[i][i] for i in range(n)):
            return False
        for i in range(n):
            for j in range(n):
                if i != j and r[i][j] and r[j][i]:
                    return False
                if r[i][j] and not all(r[i][k] for k in range(n) if r[j][k]):
                    return False
        return True


def poset_from_relation(elements: Sequence, relation) -> FinitePoset:
    elements = tuple(elements)
    return FinitePoset(
        elements, tuple(tuple(bool(relation(a, b)) for b in elements) for a in elements)
    )


def _vertex_poset(elements) -> FinitePoset:
    return poset_from_relation(elements, lambda a, b: le(a, b) is not None)


def closed_interval(x: GroupoidElement, z: GroupoidElement) -> FinitePoset:
    """``{y | x <= y <= z}``, sorted by level."""
    s = le(x, z)
    if s is None:
        raise ValueError(f"{x} is not below {z}")
    ys = {compose(x, split(f)) for f in forests_below(s.minus)}
    return _vertex_poset(sorted(ys, key=lambda y: (y.level, y)))


def open_interval(x: GroupoidElement, z: GroupoidElement) -> FinitePoset:
    p = closed_interval(x, z)
    if x == z:
        raise ValueError("open interval needs x < z")
    return p.subposet(i for i, y in enumerate(p.elements) if y != x and y != z)


def core_map(x: GroupoidElement, y: GroupoidElement) -> GroupoidElement:
    """``x s -> x core(s)`` for a non-trivial split ``s``."""
    s = le(x, y)
    if s is None:
        raise ValueError(f"{x} is not below {y}")
    if s.is_identity():
        raise ValueError("core map needs y != x")
    return compose(x, split(elementary_core(s.minus)))


def order_complex(p: FinitePoset) -> SimplicialComplex:
    """Simplices are chains; vertex labels are the poset's elements."""
    return SimplicialComplex(
        tuple(p.elements[i] for i in chain) for chain in p.chains()
    )


# --- enumeration helpers -------------------------------------------------------


def enumerate_vertices(max_leaves: int, max_level: Optional[int] = None) -> list[GroupoidElement]:
    """All reduced vertices ``[t | f]`` with at most ``max_leaves`` leaves."""
    out = []
    for n in range(1, max_leaves + 1):
        forests = [
            f for f in enumerate_forests(n) if max_level is None or f.root_count <= max_level
        ]
        for t in enumerate_trees(n):
            tf = Forest.of_tree(t)
            for f in forests:
                if reduce_pair(tf, f) == (tf, f):
                    out.append(GroupoidElement(tf, f))
    return out


def splits_with(roots: int, carets: int) -> list[GroupoidElement]:
    return [split(f) for f in enumerate_forests(roots + carets, roots)]


def transitivity_failure(max_level: int = 3) -> Optional[tuple]:
    """A triple ``x, y, z`` with ``x ⪯ y ⪯ z`` but not ``x ⪯ z``."""
    for n in range(1, max_level + 1):
        x = identity(1) if n == 1 else split(Forest.of_tree(enumerate_trees(n)[0]))
        for e1 in splits_with(x.level, 1):
            y = compose(x, e1)
            for e2 in splits_with(y.level, 1):
                z = compose(y, e2)
                if elementary_le(x, y) and elementary_le(y, z) and not elementary_le(x, z):
                    return x, y, z
    return None


def parse_groupoid_element(text: str) -> GroupoidElement:
    s = text.strip()
    if len(s) < 2 or s[0] != "[" or s[-1] != "]":
        raise ParseError(f"groupoid literal must look like [Forest|Forest], got {text!r}")
    parts = s[1:-1].split("|")
    if len(parts) != 2:
        raise ParseError(f"groupoid literal needs exactly one '|', got {text!r}")
    minus, plus = Forest.parse(parts[0]), Forest.parse(parts[1])
    if minus.leaf_count != plus.leaf_count:
        raise ParseError(f"forests in {text!r} have different leaf counts")
    return element(minus, plus)

