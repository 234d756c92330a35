"""Path graphs, matching complexes, and their connectivity."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .complexes import SimplicialComplex
from .homology import HomologyGroup, connected_through, is_acyclic, reduced_homology


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset

    def __post_init__(self):
        norm = set()
        for e in self.edges:
            u, v = sorted(e)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (1 <= u and v <= self.n):
                raise ValueError(f"edge {e} outside vertex range 1..{self.n}")
            if (u, v) in norm:
                raise ValueError(f"repeated edge {{{u}, {v}}}")
            norm.add((u, v))
        object.__setattr__(self, "edges", frozenset(norm))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(1, n)))


def matchings(g: Graph) -> list[tuple]:
    """All non-empty matchings, each a sorted tuple of edges."""
    edges = g.sorted_edges()
    out = []

    def grow(start, chosen, used):
        for idx in range(start, len(edges)):
            u, v = edges[idx]
            if u in used or v in used:
                continue
            m = chosen + (edges[idx],)
            out.append(m)
            grow(idx + 1, m, used | {u, v})

    grow(0, (), frozenset())
    return out


def matching_complex(g: Graph) -> SimplicialComplex:
    # matchings are closed under subsets already
    return SimplicialComplex.from_closed(matchings(g))


def nu(m: int) -> int:
    return (m - 2) // 3


@dataclass
class StarDecomposition:
    n: int
    full: SimplicialComplex
    a: SimplicialComplex
    b: SimplicialComplex
    intersection: SimplicialComplex
    union_ok: bool
    intersection_ok: bool

    @property
    def ok(self) -> bool:
        return self.union_ok and self.intersection_ok


def star_decomposition(n: int) -> StarDecomposition:
    """M(L_n) as M(L_{n-1}) glued to the closed star of the edge {n-1, n}."""
    if n < 5:
        raise ValueError(f"star decomposition is stated for n >= 5, got {n}")
    full = matching_complex(path_graph(n))
    last = (n - 1, n)
    a = full.without_vertex(last)
    b = full.closed_star(last)
    inter = a.intersection(b)
    return StarDecomposition(
        n=n,
        full=full,
        a=a,
        b=b,
        intersection=inter,
        union_ok=a.union(b) == full and a == matching_complex(path_graph(n - 1)),
        intersection_ok=inter == matching_complex(path_graph(n - 2)),
    )


@dataclass
class ConnectivityReport:
    n: int
    nu: int
    f_vector: tuple
    homology: list = field(default_factory=list)
    homologically_connected_through: int = -1
    contractible_expected: bool = False
    passed: bool = False

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "nu": self.nu,
            "f_vector": list(self.f_vector),
            "betti": [h.betti for h in self.homology],
            "torsion": [list(h.torsion) for h in self.homology],
            "contractible_expected": self.contractible_expected,
            "pass": self.passed,
        }


def concentrated_sphere_like(homology: list[HomologyGroup]) -> Optional[int]:
    """The unique degree carrying Z with everything else zero, if any."""
    nonzero = [h for h in homology if not h.is_zero()]
    if len(nonzero) == 1 and nonzero[0].betti == 1 and not nonzero[0].torsion:
        return nonzero[0].degree
    return None


def connectivity_report(n: int) -> ConnectivityReport:
    if n < 2:
        raise ValueError(f"connectivity report needs n >= 2, got {n}")
    c = matching_complex(path_graph(n))
    hom = reduced_homology(c)
    through = connected_through(hom)
    expected = n % 3 == 2
    ok = through >= nu(n) - 1
    if expected:
        ok = ok and is_acyclic(hom)
    elif n >= 3:
        ok = ok and concentrated_sphere_like(hom) is not None
    return ConnectivityReport(
        n=n,
        nu=nu(n),
        f_vector=c.f_vector(),
        homology=hom,
        homologically_connected_through=through,
        contractible_expected=expected,
        passed=ok,
    )
