import random

import pytest
from hypothesis import given, settings, strategies as st

from thompsonf.homology import reduced_homology
from thompsonf.matching import (
    Graph,
    concentrated_sphere_like,
    connectivity_report,
    matching_complex,
    matchings,
    nu,
    path_graph,
    star_decomposition,
)

from oracles import brute_matchings


def mcomplex(n):
    return matching_complex(path_graph(n))


@st.composite
def graphs(draw):
    n = draw(st.integers(1, 7))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return Graph(n, [p for p in pairs if draw(st.booleans())])


class TestGraph:
    def test_path(self):
        assert path_graph(4).sorted_edges() == [(1, 2), (2, 3), (3, 4)]

    @pytest.mark.parametrize("edges", [[(1, 1)], [(1, 2), (2, 1)], [(0, 1)], [(1, 5)]])
    def test_invalid(self, edges):
        with pytest.raises(ValueError):
            Graph(3, edges)


class TestMatchingComplex:
    def test_small(self):
        assert mcomplex(2).f_vector() == (1,)
        assert mcomplex(4).f_vector() == (3, 1)
        assert mcomplex(4).edges() == [((1, 2), (3, 4))]

    def test_six(self):
        c = mcomplex(6)
        assert c.f_vector() == (5, 6, 1)
        assert c.euler_characteristic() == 0

    @settings(max_examples=60)
    @given(graphs())
    def test_against_brute_force(self, g):
        got = {tuple(sorted(m)) for m in matchings(g)}
        assert got == brute_matchings(g.n, g.edges)
        c = matching_complex(g)
        assert c.is_face_closed()
        assert len(c) == len(got)


class TestNu:
    @pytest.mark.parametrize("m, v", [(2, 0), (5, 1), (11, 3), (0, -1), (1, -1), (8, 2)])
    def test_values(self, m, v):
        assert nu(m) == v


class TestStar:
    def test_five(self):
        d = star_decomposition(5)
        assert d.a.f_vector() == (3, 1)
        assert d.intersection.f_vector() == (2,)
        assert d.ok

    def test_six(self):
        d = star_decomposition(6)
        assert d.intersection == mcomplex(4)

    def test_range(self):
        assert all(star_decomposition(n).ok for n in range(5, 13))

    def test_small_rejected(self):
        with pytest.raises(ValueError):
            star_decomposition(4)


class TestConnectivity:
    def test_three(self):
        h = reduced_homology(mcomplex(3))
        assert [x.betti for x in h] == [1]

    def test_five_contractible(self):
        assert all(x.is_zero() for x in reduced_homology(mcomplex(5)))

    def test_six(self):
        h = reduced_homology(mcomplex(6))
        assert [x.betti for x in h] == [0, 1, 0]
        assert all(not x.torsion for x in h)

    def test_eight_acyclic(self):
        # n = 8 is 2 mod 3, so the complex is contractible
        rep = connectivity_report(8)
        assert rep.to_json()["betti"] == [0, 0, 0, 0]
        assert rep.passed

    def test_json_keys(self):
        assert set(connectivity_report(4).to_json()) == {
            "n", "nu", "f_vector", "betti", "torsion", "contractible_expected", "pass"
        }

    def test_sphere_like(self):
        assert concentrated_sphere_like(reduced_homology(mcomplex(6))) == 1
        assert concentrated_sphere_like(reduced_homology(mcomplex(5))) is None

    def test_random_graph_euler(self):
        rng = random.Random(7)
        for _ in range(20):
            n = rng.randint(2, 7)
            pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
            g = Graph(n, [p for p in pairs if rng.random() < 0.5])
            c = matching_complex(g)
            h = reduced_homology(c)
            if c.is_empty():
                continue
            assert c.euler_characteristic() - 1 == sum((-1) ** x.degree * x.betti for x in h)
