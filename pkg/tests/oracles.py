"""Brute-force oracles.  Each one avoids the code path it is used to check."""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from itertools import combinations
from math import gcd

from thompsonf.forest import Forest, enumerate_forests, simple_expansion
from thompsonf.groupoid import compose, split


def search_expansion_path(g: Forest, f: Forest):
    """Breadth-first search over simple expansions from ``f`` to ``g``."""
    if g.root_count != f.root_count or g.leaf_count < f.leaf_count:
        return None
    queue = deque([(f, [])])
    seen = {f}
    while queue:
        cur, path = queue.popleft()
        if cur == g:
            return path
        if cur.leaf_count >= g.leaf_count:
            continue
        for k in range(1, cur.leaf_count + 1):
            nxt = simple_expansion(cur, k)
            if nxt not in seen:
                seen.add(nxt)
                queue.append((nxt, path + [k]))
    return None


def search_common_expansion(f: Forest, g: Forest, max_leaves: int):
    """Caret-minimal common expansions among all forests up to ``max_leaves``."""
    best = []
    for n in range(f.root_count, max_leaves + 1):
        for h in enumerate_forests(n, f.root_count):
            if search_expansion_path(h, f) is not None and search_expansion_path(h, g) is not None:
                best.append(h)
        if best:
            return best
    return best


def _exposed_pairs(t, offset, out):
    if not t:
        return 1
    if t == ((), ()):
        out.add(offset)
        return 2
    n = _exposed_pairs(t[0], offset, out)
    return n + _exposed_pairs(t[1], offset + n, out)


def sibling_leaves(f: Forest) -> set:
    out, off = set(), 1
    for t in f.trees:
        off += _exposed_pairs(t, off, out)
    return out


def is_reduced_pair(a: Forest, b: Forest) -> bool:
    return not (sibling_leaves(a) & sibling_leaves(b))


def search_le(x, y):
    """Split ``s`` with ``x s == y`` found by enumerating forests (no division)."""
    if x.source != y.source:
        return None
    k, n = x.level, y.level
    if n < k:
        return None
    for e in enumerate_forests(n, k):
        s = split(e)
        if compose(x, s) == y:
            return s
    return None


def brute_matchings(n_vertices: int, edges) -> set:
    edges = sorted(tuple(sorted(e)) for e in edges)
    out = set()
    for k in range(1, len(edges) + 1):
        for sub in combinations(edges, k):
            ends = [v for e in sub for v in e]
            if len(ends) == len(set(ends)):
                out.add(sub)
    return out


def brute_chains(elements, less) -> set:
    out = set()
    n = len(elements)
    for k in range(1, n + 1):
        for sub in combinations(range(n), k):
            if all(less(elements[a], elements[b]) or less(elements[b], elements[a])
                   for a, b in combinations(sub, 2)):
                out.add(tuple(sorted(elements[i] for i in sub)))
    return out


def det(m) -> Fraction:
    a = [[Fraction(v) for v in row] for row in m]
    n = len(a)
    out = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            out = -out
        out *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return out


def determinantal_invariant_factors(m) -> list[int]:
    """``d_k = D_k / D_{k-1}`` where ``D_k`` is the gcd of all k x k minors."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    divisors = [1]
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for rs in combinations(range(rows), k):
            for cs in combinations(range(cols), k):
                g = gcd(g, int(det([[m[r][c] for c in cs] for r in rs])))
        if g == 0:
            break
        divisors.append(g)
    return [divisors[k] // divisors[k - 1] for k in range(1, len(divisors))]
