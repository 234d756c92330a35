import pytest
from hypothesis import given, settings, strategies as st

from thompsonf.forest import Forest, ParseError, contract, enumerate_trees, exposed_carets, leaf_count, simple_expansion
from thompsonf.thompson import (
    IDENTITY,
    evaluate_word,
    generator,
    inverse,
    multiply,
    parse_element,
    parse_word,
    reduce,
    verify_relation,
)

from oracles import is_reduced_pair

T = parse_element

words = st.lists(st.tuples(st.integers(0, 4), st.sampled_from([1, -1])), max_size=6)


def all_orders(minus, plus):
    """Every terminal pair reachable by cancelling common carets in any order."""
    out, stack, seen = set(), [(Forest.of_tree(minus), Forest.of_tree(plus))], set()
    while stack:
        a, b = stack.pop()
        if (a, b) in seen:
            continue
        seen.add((a, b))
        moves = sorted(set(exposed_carets(a)) & set(exposed_carets(b)))
        if not moves:
            out.add((a.trees[0], b.trees[0]))
        stack.extend((contract(a, k), contract(b, k)) for k in moves)
    return out


def expand_pair(g, k):
    a = simple_expansion(Forest.of_tree(g.minus), k).trees[0]
    b = simple_expansion(Forest.of_tree(g.plus), k).trees[0]
    return a, b


class TestReduce:
    def test_full_cancellation(self):
        caret = ((), ())
        assert reduce(caret, caret) == IDENTITY
        big = (caret, caret)
        assert reduce(big, big) == IDENTITY

    def test_expansion_of_x0(self):
        x0 = generator(0)
        assert reduce(*expand_pair(x0, 1)) == x0

    def test_mismatch(self):
        with pytest.raises(ValueError):
            reduce(((), ()), ())

    def test_confluence_exhaustive(self):
        for n in range(1, 6):
            for t in enumerate_trees(n):
                for u in enumerate_trees(n):
                    g = reduce(t, u)
                    assert all_orders(t, u) == {(g.minus, g.plus)}
                    assert is_reduced_pair(Forest.of_tree(g.minus), Forest.of_tree(g.plus))

    @given(words, st.data())
    def test_expansion_invariance(self, word, data):
        g = evaluate_word(word)
        k = data.draw(st.integers(1, g.leaves))
        assert reduce(*expand_pair(g, k)) == g


class TestGenerators:
    def test_x0(self):
        assert str(generator(0)) == "[((00)0),(0(00))]"

    def test_x1(self):
        assert str(generator(1)) == "[(0((00)0)),(0(0(00)))]"

    def test_leaf_counts(self):
        for i in range(8):
            assert generator(i).leaves == i + 3
            g = generator(i)
            assert reduce(g.minus, g.plus) == g

    def test_negative(self):
        with pytest.raises(ValueError):
            generator(-1)


class TestRelations:
    def test_x1_x0(self):
        assert multiply(generator(1), generator(0)) == multiply(generator(0), generator(2))

    @pytest.mark.parametrize("i, j", [(0, 1), (0, 2)])
    def test_examples(self, i, j):
        assert verify_relation(i, j)

    def test_sweep(self):
        assert all(verify_relation(i, j) for j in range(1, 7) for i in range(j))

    @pytest.mark.parametrize("i, j", [(1, 1), (2, 1), (-1, 0)])
    def test_bad_indices(self, i, j):
        with pytest.raises(ValueError):
            verify_relation(i, j)

    def test_generators_do_not_commute(self):
        assert multiply(generator(0), generator(1)) != multiply(generator(1), generator(0))


class TestGroupLaws:
    def test_inverse_x0(self):
        assert str(inverse(generator(0))) == "[(0(00)),((00)0)]"

    def test_inverse_identity(self):
        assert inverse(IDENTITY) == IDENTITY

    @given(words)
    def test_inverse_laws(self, w):
        g = evaluate_word(w)
        assert multiply(g, inverse(g)) == IDENTITY
        assert multiply(inverse(g), g) == IDENTITY
        assert inverse(inverse(g)) == g

    @given(words)
    def test_identity_laws(self, w):
        g = evaluate_word(w)
        assert multiply(IDENTITY, g) == g == multiply(g, IDENTITY)

    @settings(max_examples=60)
    @given(words, words, words)
    def test_associative(self, a, b, c):
        g, h, k = evaluate_word(a), evaluate_word(b), evaluate_word(c)
        assert multiply(multiply(g, h), k) == multiply(g, multiply(h, k))

    @given(words, words)
    def test_leaf_bound(self, a, b):
        g, h = evaluate_word(a), evaluate_word(b)
        gh = multiply(g, h)
        assert leaf_count(gh.minus) <= leaf_count(g.minus) + leaf_count(h.minus) - 1

    @given(words, words)
    def test_word_concatenation(self, a, b):
        assert evaluate_word(a + b) == multiply(evaluate_word(a), evaluate_word(b))


class TestWords:
    def test_empty(self):
        assert evaluate_word([]) == IDENTITY

    def test_cancel(self):
        assert evaluate_word([(0, 1), (0, -1)]) == IDENTITY

    def test_relation(self):
        assert evaluate_word([(1, 1), (0, 1)]) == evaluate_word([(0, 1), (2, 1)])

    def test_bad_exponent(self):
        with pytest.raises(ValueError):
            evaluate_word([(0, 2)])

    def test_parse_word(self):
        assert parse_word("x1 x0^-1 * x2") == [(1, 1), (0, -1), (2, 1)]
        with pytest.raises(ParseError):
            parse_word("y1")


class TestLiterals:
    def test_reduced_on_parse(self):
        assert T("[(00),(00)]") == IDENTITY
        assert str(T("[((00)(00)),((00)(00))]")) == "[0,0]"

    @given(words)
    def test_round_trip(self, w):
        g = evaluate_word(w)
        assert T(str(g)) == g

    @pytest.mark.parametrize("bad", ["(00),(00)", "[(00)]", "[(00),0]", "[(00),(00),(00)]", "[(0x),(00)]"])
    def test_malformed(self, bad):
        with pytest.raises(ParseError):
            T(bad)

    def test_operators(self):
        x0 = generator(0)
        assert x0 * ~x0 == IDENTITY
