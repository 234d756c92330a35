import pytest

from thompsonf.complexes import discrete
from thompsonf.forest import Forest, enumerate_elementary_forests
from thompsonf.groupoid import (
    compose,
    elementary_le,
    enumerate_vertices,
    identity,
    open_interval,
    order_complex,
    split,
)
from thompsonf.homology import reduced_homology
from thompsonf.matching import matching_complex, path_graph
from thompsonf.stein import (
    Cube,
    caret_edge,
    cube,
    cube_faces,
    descending_link,
    descending_link_at,
    descending_link_iso,
    level,
    merge_carets,
    morse_check,
    relative_link,
    single_carets,
    suspension_of_interval,
    truncated_subcomplex,
)

P = Forest.parse
ROOT = split(P("(00)"))


class TestCarets:
    def test_caret_edge(self):
        assert caret_edge(P("0,(00),0")) == (2, 3)
        assert caret_edge(P("(00),0")) == (1, 2)

    def test_single_carets(self):
        assert single_carets(P("(00),0,(00)")) == [P("(00),0,0,0"), P("0,0,0,(00)")]

    def test_merge_inverts_split(self):
        for e in enumerate_elementary_forests(7):
            edges = [caret_edge(s) for s in single_carets(e)]
            assert merge_carets(7, edges) == e


class TestCubes:
    def test_vertex(self):
        c = cube(ROOT, P("0,0"))
        assert c.dim == 0
        assert cube_faces(c) == [c]

    def test_edge(self):
        c = cube(ROOT, P("(00),0"))
        dims = sorted(f.dim for f in cube_faces(c))
        assert dims == [0, 0, 1]
        assert level(c.top) - level(c.bottom) == 1

    def test_square(self):
        c = cube(ROOT, P("(00),(00)"))
        dims = sorted(f.dim for f in cube_faces(c))
        assert dims == [0] * 4 + [1] * 4 + [2]
        assert sorted(level(y) for y in c.vertices().elements) == [2, 3, 3, 4]
        assert morse_check(c)

    def test_non_elementary_rejected(self):
        with pytest.raises(ValueError):
            cube(identity(1), P("(0(00))"))

    def test_arity_rejected(self):
        with pytest.raises(ValueError):
            cube(ROOT, P("0,0,0"))

    def test_morse_sweep(self):
        for x in enumerate_vertices(4, 4):
            for e in enumerate_elementary_forests(2 * x.level):
                if e.root_count == x.level:
                    assert morse_check(cube(x, e))

    def test_truncation_edges_are_cubes(self):
        c = truncated_subcomplex(4, 4)
        for a, b in c.edges():
            lo, hi = sorted([a, b], key=level)
            assert level(hi) > level(lo)
            assert elementary_le(lo, hi)


class TestDescendingLink:
    def test_small(self):
        assert descending_link(2).f_vector() == (1,)
        assert descending_link(3).f_vector() == (2,)

    def test_five(self):
        link = descending_link(5)
        assert link.f_vector() == (4, 3)
        edges = sorted(tuple(sorted(caret_edge(v) for v in e)) for e in link.edges())
        assert edges == [((1, 2), (3, 4)), ((1, 2), (4, 5)), ((2, 3), (4, 5))]

    def test_eight(self):
        assert descending_link(8).f_vector() == matching_complex(path_graph(8)).f_vector() == (7, 15, 10, 1)

    @pytest.mark.parametrize("n", range(2, 11))
    def test_iso(self, n):
        assert descending_link_iso(n).ok

    def test_concrete_vertex(self):
        x = compose(split(P("((00)0)")), split(P("(00),0,(00)")))
        link = descending_link_at(x)
        assert link.f_vector() == descending_link(level(x)).f_vector()
        assert all(level(y) == level(x) - 1 and elementary_le(y, x) for y in link.vertices)


class TestRelativeLink:
    def test_point_interval(self):
        x, z = identity(1), split(P("(0(00))"))
        rel = relative_link(x, z)
        (mid,) = open_interval(x, z).elements
        assert rel.f_vector() == (3, 2)
        assert rel == discrete([x, z]).join(discrete([mid]))

    def test_vine_shift(self):
        x, z = identity(1), split(P("(0(0(00)))"))
        rel = relative_link(x, z)
        assert rel == suspension_of_interval(x, z)
        h_rel = reduced_homology(rel)
        h_open = reduced_homology(order_complex(open_interval(x, z)))
        for k in range(1, len(h_rel)):
            below = h_open[k - 1] if k - 1 < len(h_open) else None
            assert h_rel[k].betti == (below.betti if below else 0)

    def test_elementary_rejected(self):
        with pytest.raises(ValueError):
            relative_link(ROOT, compose(ROOT, split(P("(00),(00)"))))

    def test_not_below_rejected(self):
        with pytest.raises(ValueError):
            relative_link(ROOT, identity(1))


class TestTruncation:
    def test_point(self):
        c = truncated_subcomplex(1, 1)
        assert c.vertices == [identity(1)]

    def test_counts(self):
        # brute-force chain enumeration over split search, frozen
        assert truncated_subcomplex(3, 3).f_vector() == (8, 7)
        assert truncated_subcomplex(4, 4).f_vector() == (50, 59, 10)

    def test_bounds(self):
        c = truncated_subcomplex(4, 3)
        assert all(v.minus.leaf_count <= 4 and level(v) <= 3 for v in c.vertices)

    def test_cube_type(self):
        assert isinstance(cube(ROOT, P("0,0")), Cube)
