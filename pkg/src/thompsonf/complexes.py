"""Abstract simplicial complexes over totally ordered vertex labels."""

from __future__ import annotations

from itertools import combinations
from typing import Callable, Iterable, Mapping


def _faces(simplex: tuple) -> Iterable[tuple]:
    for k in range(1, len(simplex) + 1):
        yield from combinations(simplex, k)


class SimplicialComplex:
    """A face-closed set of simplices.

    Simplices are stored as sorted tuples of labels; the empty simplex is
    implicit.  The constructor takes any iterable of vertex collections and
    closes it under faces.
    """

    __slots__ = ("simplices", "_by_dim")

    def __init__(self, simplices: Iterable[Iterable] = ()):
        closed = set()
        for s in simplices:
            s = tuple(sorted(set(s)))
            if not s or s in closed:
                continue
            closed.update(_faces(s))
        self.simplices = frozenset(closed)
        self._by_dim = None

    @classmethod
    def from_closed(cls, simplices: Iterable[tuple]) -> "SimplicialComplex":
        """Trust the caller that ``simplices`` is already face-closed and sorted."""
        obj = cls.__new__(cls)
        obj.simplices = frozenset(simplices)
        obj._by_dim = None
        return obj

    def __eq__(self, other) -> bool:
        return isinstance(other, SimplicialComplex) and self.simplices == other.simplices

    def __hash__(self) -> int:
        return hash(self.simplices)

    def __len__(self) -> int:
        return len(self.simplices)

    def __contains__(self, simplex) -> bool:
        return tuple(sorted(simplex)) in self.simplices

    def __repr__(self) -> str:
        return f"SimplicialComplex(f_vector={self.f_vector()})"

    @property
    def dim(self) -> int:
        return max((len(s) for s in self.simplices), default=0) - 1

    @property
    def vertices(self) -> list:
        return sorted(s[0] for s in self.simplices if len(s) == 1)

    def is_empty(self) -> bool:
        return not self.simplices

    def simplices_of_dim(self, k: int) -> list[tuple]:
        if self._by_dim is None:
            by_dim: dict[int, list] = {}
            for s in self.simplices:
                by_dim.setdefault(len(s) - 1, []).append(s)
            self._by_dim = {d: sorted(v) for d, v in by_dim.items()}
        return self._by_dim.get(k, [])

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(self.simplices_of_dim(k)) for k in range(self.dim + 1))

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * n for k, n in enumerate(self.f_vector()))

    def is_face_closed(self) -> bool:
        return all(
            f in self.simplices
            for s in self.simplices
            for f in combinations(s, len(s) - 1)
            if f
        )

    def facets(self) -> list[tuple]:
        out = []
        for s in self.simplices:
            ss = set(s)
            if not any(len(t) == len(s) + 1 and ss <= set(t) for t in self.simplices):
                out.append(s)
        return sorted(out, key=lambda s: (len(s), s))

    def edges(self) -> list[tuple]:
        return self.simplices_of_dim(1)

    # --- constructions ---------------------------------------------------

    def union(self, other: "SimplicialComplex") -> "SimplicialComplex":
        return SimplicialComplex.from_closed(self.simplices | other.simplices)

    def intersection(self, other: "SimplicialComplex") -> "SimplicialComplex":
        return SimplicialComplex.from_closed(self.simplices & other.simplices)

    def induced(self, keep: Callable[[object], bool]) -> "SimplicialComplex":
        """Full subcomplex on the vertices satisfying ``keep``."""
        return SimplicialComplex.from_closed(
            s for s in self.simplices if all(keep(v) for v in s)
        )

    def without_vertex(self, v) -> "SimplicialComplex":
        return self.induced(lambda u: u != v)

    def link(self, v) -> "SimplicialComplex":
        return SimplicialComplex.from_closed(
            tuple(u for u in s if u != v) for s in self.simplices if v in s and len(s) > 1
        )

    def closed_star(self, v) -> "SimplicialComplex":
        """All simplices ``s`` with ``s ∪ {v}`` a simplex."""
        containing = [s for s in self.simplices if v in s]
        return SimplicialComplex(containing)

    def join(self, other: "SimplicialComplex") -> "SimplicialComplex":
        """Simplicial join; vertex sets must be disjoint and mutually comparable."""
        if set(self.vertices) & set(other.vertices):
            raise ValueError("join needs disjoint vertex sets")
        pieces = list(self.simplices) + list(other.simplices)
        pieces += [a + b for a in self.simplices for b in other.simplices]
        return SimplicialComplex(pieces)

    def relabel(self, mapping: Mapping) -> "SimplicialComplex":
        return SimplicialComplex(tuple(mapping[v] for v in s) for s in self.simplices)


def discrete(points: Iterable) -> SimplicialComplex:
    return SimplicialComplex((p,) for p in points)


def suspension(c: SimplicialComplex, north, south) -> SimplicialComplex:
    return discrete([north, south]).join(c)


def simplex_boundary(n: int) -> SimplicialComplex:
    """Boundary of the standard n-simplex on labels 0..n."""
    return SimplicialComplex(combinations(range(n + 1), n))


def check_isomorphism(a: SimplicialComplex, b: SimplicialComplex, mapping: Mapping) -> dict:
    """Check that ``mapping`` is a vertex bijection carrying simplices of ``a``
    exactly onto the simplices of ``b``."""
    va, vb = set(a.vertices), set(b.vertices)
    bijective = set(mapping) == va and set(mapping.values()) == vb and len(set(mapping.values())) == len(va)
    image = {tuple(sorted(mapping[v] for v in s)) for s in a.simplices} if bijective else set()
    forward = bijective and image <= b.simplices
    backward = bijective and b.simplices <= image
    return {"bijective": bijective, "forward": forward, "backward": backward}


def to_dot(c: SimplicialComplex, name: str = "G", label=str) -> str:
    """Undirected DOT graph of the 1-skeleton."""
    lines = [f"graph {name} {{"]
    for v in c.vertices:
        lines.append(f'  "{label(v)}";')
    for a, b in c.edges():
        lines.append(f'  "{label(a)}" -- "{label(b)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def f_vector_lines(c: SimplicialComplex) -> list[str]:
    return [f"dim {k}: {n}" for k, n in enumerate(c.f_vector())]
