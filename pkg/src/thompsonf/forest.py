"""Finite rooted binary trees and forests.

A tree is a nested tuple: the leaf is ``()`` and a caret over two subtrees
``l`` and ``r`` is ``(l, r)``.  Tuples are hashable and totally ordered, so
trees can be used directly as dictionary keys and sorted deterministically.

Text grammar::

    Tree   ::= "0" | "(" Tree Tree ")"
    Forest ::= Tree ("," Tree)*

Leaf and root indices are 1-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Optional

LEAF: tuple = ()
CARET: tuple = (LEAF, LEAF)


class ParseError(ValueError):
    pass


def caret(left=LEAF, right=LEAF) -> tuple:
    return (left, right)


def is_leaf(t) -> bool:
    return t == LEAF


@lru_cache(maxsize=None)
def leaf_count(t) -> int:
    if not t:
        return 1
    return leaf_count(t[0]) + leaf_count(t[1])


def caret_count(t) -> int:
    return leaf_count(t) - 1


def format_tree(t) -> str:
    if not t:
        return "0"
    return "(" + format_tree(t[0]) + format_tree(t[1]) + ")"


def _parse_tree_at(text: str, pos: int):
    if pos >= len(text):
        raise ParseError(f"unexpected end of input in {text!r}")
    ch = text[pos]
    if ch == "0":
        return LEAF, pos + 1
    if ch == "(":
        left, pos = _parse_tree_at(text, pos + 1)
        right, pos = _parse_tree_at(text, pos)
        if pos >= len(text) or text[pos] != ")":
            raise ParseError(f"expected ')' at position {pos} in {text!r}")
        return (left, right), pos + 1
    raise ParseError(f"unexpected {ch!r} at position {pos} in {text!r}")


def parse_tree(text: str):
    text = text.strip()
    t, pos = _parse_tree_at(text, 0)
    if pos != len(text):
        raise ParseError(f"trailing characters after position {pos} in {text!r}")
    return t


@dataclass(frozen=True, order=True)
class Forest:
    """An ordered, non-empty sequence of trees."""

    trees: tuple

    def __post_init__(self):
        if not isinstance(self.trees, tuple):
            object.__setattr__(self, "trees", tuple(self.trees))
        if not self.trees:
            raise ValueError("a forest needs at least one tree")

    @classmethod
    def parse(cls, text: str) -> "Forest":
        parts = text.strip().split(",")
        return cls(tuple(parse_tree(p) for p in parts))

    @classmethod
    def trivial(cls, n: int) -> "Forest":
        if n < 1:
            raise ValueError(f"trivial forest needs n >= 1, got {n}")
        return cls((LEAF,) * n)

    @classmethod
    def of_tree(cls, t) -> "Forest":
        return cls((t,))

    def __str__(self) -> str:
        return ",".join(format_tree(t) for t in self.trees)

    def __repr__(self) -> str:
        return f"Forest({str(self)!r})"

    def __len__(self) -> int:
        return len(self.trees)

    def __iter__(self):
        return iter(self.trees)

    @property
    def root_count(self) -> int:
        return len(self.trees)

    @property
    def leaf_count(self) -> int:
        return sum(leaf_count(t) for t in self.trees)

    @property
    def caret_count(self) -> int:
        return self.leaf_count - self.root_count

    def is_trivial(self) -> bool:
        return all(not t for t in self.trees)

    def tree_offsets(self) -> list[int]:
        """0-based index of the first leaf of each tree."""
        out, acc = [], 0
        for t in self.trees:
            out.append(acc)
            acc += leaf_count(t)
        return out


def _expand_tree(t, k: int):
    # k is 1-based within t
    if not t:
        return CARET
    nl = leaf_count(t[0])
    if k <= nl:
        return (_expand_tree(t[0], k), t[1])
    return (t[0], _expand_tree(t[1], k - nl))


def _locate(f: Forest, k: int) -> tuple[int, int]:
    """Tree index and leaf index (both 1-based) within that tree of global leaf k."""
    if not 1 <= k <= f.leaf_count:
        raise IndexError(f"leaf index {k} out of range 1..{f.leaf_count}")
    for i, t in enumerate(f.trees):
        n = leaf_count(t)
        if k <= n:
            return i, k
        k -= n
    raise AssertionError("unreachable")


def simple_expansion(f: Forest, k: int) -> Forest:
    """Attach a caret to leaf ``k`` of ``f``."""
    i, local = _locate(f, k)
    trees = list(f.trees)
    trees[i] = _expand_tree(trees[i], local)
    return Forest(tuple(trees))


def replay(f: Forest, path) -> Forest:
    for k in path:
        f = simple_expansion(f, k)
    return f


def _tree_path(src, dst, offset: int) -> Optional[list[int]]:
    # Carets are added at the leftmost still-missing position first; after
    # growing the left subtree fully, the right one starts at offset + |dst.left|.
    if not dst:
        return [] if not src else None
    if not src:
        left = _tree_path(LEAF, dst[0], offset)
        right = _tree_path(LEAF, dst[1], offset + leaf_count(dst[0]))
        return [offset] + left + right
    left = _tree_path(src[0], dst[0], offset)
    if left is None:
        return None
    right = _tree_path(src[1], dst[1], offset + leaf_count(dst[0]))
    if right is None:
        return None
    return left + right


def is_expansion_of(g: Forest, f: Forest) -> Optional[list[int]]:
    """Witness path of leaf indices taking ``f`` to ``g``, or None."""
    if g.root_count != f.root_count:
        return None
    path: list[int] = []
    offset = 1
    for src, dst in zip(f.trees, g.trees):
        steps = _tree_path(src, dst, offset)
        if steps is None:
            return None
        path.extend(steps)
        offset += leaf_count(dst)
    return path


def tree_union(a, b):
    if not a:
        return b
    if not b:
        return a
    return (tree_union(a[0], b[0]), tree_union(a[1], b[1]))


def minimal_common_expansion(f: Forest, g: Forest) -> Forest:
    if f.root_count != g.root_count:
        raise ValueError(
            f"forests {f} and {g} have different root counts "
            f"({f.root_count} vs {g.root_count})"
        )
    return Forest(tuple(tree_union(a, b) for a, b in zip(f.trees, g.trees)))


def graft(f: Forest, g: Forest) -> Forest:
    """Attach the trees of ``g`` to the leaves of ``f`` (one tree per leaf)."""
    if f.leaf_count != g.root_count:
        raise ValueError(f"cannot graft {g} ({g.root_count} roots) onto {f} ({f.leaf_count} leaves)")
    it = iter(g.trees)

    def go(t):
        if not t:
            return next(it)
        return (go(t[0]), go(t[1]))

    return Forest(tuple(go(t) for t in f.trees))


def is_elementary(f: Forest) -> bool:
    return all(t == LEAF or t == CARET for t in f.trees)


def elementary_core(f: Forest) -> Forest:
    return Forest(tuple(CARET if t else LEAF for t in f.trees))


# --- reduction of forest pairs -------------------------------------------------


def _exposed(t, offset: int, out: list[int]) -> None:
    if not t:
        return
    if t == CARET:
        out.append(offset)
        return
    _exposed(t[0], offset, out)
    _exposed(t[1], offset + leaf_count(t[0]), out)


def exposed_carets(f: Forest) -> list[int]:
    """Leaf indices i such that leaves i, i+1 hang from one caret."""
    out: list[int] = []
    for off, t in zip(f.tree_offsets(), f.trees):
        _exposed(t, off + 1, out)
    return out


def _contract_tree(t, k: int):
    if t == CARET and k == 1:
        return LEAF
    if not t:
        raise ValueError("leaves k, k+1 are not siblings")
    nl = leaf_count(t[0])
    if k < nl:
        return (_contract_tree(t[0], k), t[1])
    if k > nl:
        return (t[0], _contract_tree(t[1], k - nl))
    raise ValueError("leaves k, k+1 are not siblings")


def contract(f: Forest, k: int) -> Forest:
    """Inverse of ``simple_expansion(., k)``; leaves k, k+1 must form a caret."""
    i, local = _locate(f, k)
    trees = list(f.trees)
    if not trees[i]:
        raise ValueError(f"leaf {k} of {f} is a trivial tree")
    trees[i] = _contract_tree(trees[i], local)
    return Forest(tuple(trees))


def common_carets(a: Forest, b: Forest) -> list[int]:
    eb = set(exposed_carets(b))
    return [i for i in exposed_carets(a) if i in eb]


def reduce_pair(a: Forest, b: Forest) -> tuple[Forest, Forest]:
    """Strip common carets from a pair of forests until none remain."""
    if a.leaf_count != b.leaf_count:
        raise ValueError(f"leaf counts differ: {a} has {a.leaf_count}, {b} has {b.leaf_count}")
    while True:
        common = common_carets(a, b)
        if not common:
            return a, b
        k = common[0]
        a, b = contract(a, k), contract(b, k)


# --- enumeration ---------------------------------------------------------------


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple:
    if n == 1:
        return (LEAF,)
    out = []
    for k in range(1, n):
        for left in _trees(k):
            for right in _trees(n - k):
                out.append((left, right))
    return tuple(out)


def enumerate_trees(leaves: int) -> list:
    if leaves < 1:
        raise ValueError(f"a tree has at least one leaf, got {leaves}")
    return list(_trees(leaves))


def compositions(total: int, parts: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of positive integers summing to ``total``."""
    if parts is None:
        for p in range(1, total + 1):
            yield from compositions(total, p)
        return
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_forests(leaves: int, roots: Optional[int] = None) -> Iterator[Forest]:
    """All forests with the given leaf count (and root count, if given)."""
    for comp in compositions(leaves, roots):
        for trees in product(*(_trees(n) for n in comp)):
            yield Forest(trees)


def enumerate_elementary_forests(leaves: int, carets: Optional[int] = None) -> list[Forest]:
    out = []
    for comp in compositions(leaves):
        if any(p > 2 for p in comp):
            continue
        if carets is not None and comp.count(2) != carets:
            continue
        out.append(Forest(tuple(CARET if p == 2 else LEAF for p in comp)))
    return out


@lru_cache(maxsize=None)
def _subtrees_below(t) -> tuple:
    if not t:
        return (LEAF,)
    return (LEAF,) + tuple(
        (a, b) for a in _subtrees_below(t[0]) for b in _subtrees_below(t[1])
    )


def forests_below(f: Forest) -> list[Forest]:
    """All forests of which ``f`` is an expansion."""
    return [Forest(ts) for ts in product(*(_subtrees_below(t) for t in f.trees))]
