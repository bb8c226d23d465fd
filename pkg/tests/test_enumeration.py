from math import comb

import pytest

from dpf.core import PreconditionError, PreferenceList, orbit_size
from dpf.enumeration import (
    count_dpf_bruteforce,
    count_dpf_orbit_sum,
    count_nondecreasing,
    count_pf,
    defect_distribution,
    enumerate_dpf,
    enumerate_dpf_nondecreasing,
    nondecreasing_formula,
)


def test_listing_332():
    got = [pl.prefs for pl in enumerate_dpf_nondecreasing(3, 3, 2)]
    assert got == [(1, 4, 4), (2, 4, 4), (3, 3, 3), (3, 3, 4), (3, 4, 4)]
    assert list(enumerate_dpf_nondecreasing(2, 2, 3)) == []
    assert [pl.prefs for pl in enumerate_dpf_nondecreasing(1, 1, 1)] == [(2,)]


def test_enumerate_dpf():
    assert [pl.prefs for pl in enumerate_dpf(1, 1, 1)] == [(2,)]
    assert {pl.prefs for pl in enumerate_dpf(2, 1, 1)} == {(1, 1), (1, 2), (2, 1)}


@pytest.mark.parametrize("m, n, d, expected", [(3, 3, 2, 5), (7, 9, 2, 2548), (3, 1, 1, 0)])
def test_nondecreasing_count(m, n, d, expected):
    report = count_nondecreasing(m, n, d, verify=True)
    assert report.formula_value == report.enumerated_value == expected
    assert report.consistent


@pytest.mark.parametrize("n", range(1, 9))
def test_square_defect_zero_is_catalan(n):
    assert nondecreasing_formula(n, n, 0) == comb(2 * n, n) // (n + 1)


@pytest.mark.parametrize("m", range(1, 7))
@pytest.mark.parametrize("n", range(1, 7))
def test_formula_against_enumeration(m, n):
    for d in range(m + 2):
        assert nondecreasing_formula(m, n, d) == sum(1 for _ in enumerate_dpf_nondecreasing(m, n, d))


@pytest.mark.parametrize("m, n, d, expected", [(1, 1, 1, 1), (2, 2, 0, 3), (3, 3, 2, 13)])
def test_orbit_sum(m, n, d, expected):
    report = count_dpf_orbit_sum(m, n, d, verify=True)
    assert report.formula_value == report.enumerated_value == expected


def test_orbit_sizes_332():
    sizes = [orbit_size(pl) for pl in enumerate_dpf_nondecreasing(3, 3, 2)]
    assert sizes == [3, 3, 1, 3, 3]


@pytest.mark.parametrize("m", range(1, 6))
@pytest.mark.parametrize("n", range(1, 6))
def test_orbit_sum_matches_simulation(m, n):
    dist = defect_distribution(m, n)
    assert sum(dist.values()) == (n + 1) ** m
    for d in range(m + 1):
        assert count_dpf_orbit_sum(m, n, d).formula_value == dist[d]


def test_bruteforce_sharded():
    assert count_dpf_bruteforce(4, 3, 1, jobs=2) == count_dpf_bruteforce(4, 3, 1)


def test_count_pf():
    assert count_pf(1, 1) == 1
    assert count_pf(2, 3) == 8 == defect_distribution(2, 3)[0]
    for n in range(1, 6):
        assert count_pf(n, n) == (n + 1) ** (n - 1)
    with pytest.raises(PreconditionError):
        count_pf(3, 2)


def test_count_report_json():
    js = count_nondecreasing(3, 3, 2, verify=True).to_json()
    assert js["value"] == "5" and js["enumerated"] == "5"
    assert count_nondecreasing(3, 3, 2).to_json()["enumerated"] is None
