"""Acceptance gate: one test per criterion, exact, at the stated sizes and time limits.

``conftest.py`` prints a one-line pass/fail summary per criterion.
"""

import time

import pytest

from thompsonf.matching import connectivity_report, nu
from thompsonf.thompson import generator, multiply
from thompsonf.verify import (
    DEFAULT_SEED,
    check_boolean_intervals,
    check_descending_links,
    check_directedness,
    check_freeness_transitivity,
    check_open_intervals,
    check_partial_order,
    check_relative_links,
    check_star_decompositions,
    run_battery,
)

SEED = DEFAULT_SEED


def timed(fn, *args, **kwargs):
    t0 = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - t0


def assert_passed(result):
    assert result.status == "pass", result.details


@pytest.fixture(scope="session")
def battery():
    return timed(run_battery, 12, SEED)


def test_criterion_01_presentation_relations():
    def sweep():
        return [
            multiply(generator(j), generator(i)) == multiply(generator(i), generator(j + 1))
            for j in range(1, 7)
            for i in range(j)
        ]

    results, elapsed = timed(sweep)
    assert len(results) == 21 and all(results)
    assert elapsed < 1.0, f"{elapsed:.2f}s"


def test_criterion_02_partial_order():
    result, elapsed = timed(check_partial_order, 6, SEED)
    assert_passed(result)
    assert elapsed < 30.0, f"{elapsed:.2f}s"


def test_criterion_03_directedness():
    assert_passed(check_directedness(SEED, 200))


def test_criterion_04_freeness_and_transitivity():
    assert_passed(check_freeness_transitivity(SEED, 200))


def test_criterion_05_boolean_intervals():
    assert_passed(check_boolean_intervals(max_carets=4, max_level=5, base_leaves=5))


def test_criterion_06_open_interval_contractibility():
    result, elapsed = timed(check_open_intervals, 4, 3, 3)
    assert_passed(result)
    assert elapsed < 60.0, f"{elapsed:.2f}s"


def test_criterion_07_relative_link_suspension():
    assert_passed(check_relative_links(4, 3, 3))


def test_criterion_08_descending_link_isomorphism():
    assert_passed(check_descending_links(10, SEED))


def test_criterion_09_star_decomposition():
    assert_passed(check_star_decompositions(12))


def test_criterion_10_connectivity(battery):
    for n in range(2, 13):
        rep = connectivity_report(n)
        hom = rep.homology
        assert all(h.is_zero() for h in hom[: max(nu(n), 0)]), n
        if n in (5, 8, 11):
            assert all(h.is_zero() for h in hom), n
        if n % 3 in (0, 1):
            nonzero = [h for h in hom if not h.is_zero()]
            assert len(nonzero) == 1 and nonzero[0].betti == 1 and not nonzero[0].torsion, n
    report, elapsed = battery
    by_name = {r.name: r for r in report.results}
    assert_passed(by_name["matching.connectivity"])
    assert report.ok, [r.name for r in report.results if r.status == "fail"]
    assert elapsed < 300.0, f"{elapsed:.1f}s"


def test_criterion_11_homology_engine(battery):
    report, _ = battery
    by_name = {r.name: r for r in report.results}
    assert_passed(by_name["homology.self_checks"])
