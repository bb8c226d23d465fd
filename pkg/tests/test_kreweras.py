from math import comb

import pytest

from dpf.core import PreconditionError
from dpf.kreweras import (
    GradedFrobenius,
    NonIntegerError,
    Partition,
    check_conjecture,
    check_vanishing,
    classical_kreweras,
    conjecture_formula,
    defective_kreweras,
    defective_kreweras_via_paths,
    frobenius_char,
    frobenius_from_kreweras,
    partitions_of,
)

L = Partition


def catalan(m):
    return comb(2 * m, m) // (m + 1)


@pytest.mark.parametrize("m", range(1, 9))
def test_classical_sums_to_catalan(m):
    assert sum(classical_kreweras(lam) for lam in partitions_of(m)) == catalan(m)


@pytest.mark.parametrize("m", range(1, 7))
def test_classical_extremes(m):
    assert classical_kreweras(L((m,))) == 1
    # every part distinct forces the list (1, 2, ..., m)
    ones = L((1,) * m)
    assert classical_kreweras(ones) == 1 == defective_kreweras(0, m, ones)


@pytest.mark.parametrize("m", range(1, 6))
def test_classical_is_zero_predefect_square(m):
    for lam in partitions_of(m):
        assert classical_kreweras(lam) == defective_kreweras(0, m, lam)


@pytest.mark.parametrize("d, expected", [(0, 3), (1, 5), (2, 4), (3, 0)])
def test_defective_example(d, expected):
    assert defective_kreweras(d, 3, L((2, 1))) == expected
    assert defective_kreweras_via_paths(d, 3, L((2, 1))) == expected


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("m", range(1, 6))
def test_two_counting_methods_agree(m, n):
    for lam in partitions_of(m):
        for d in range(n + 2):
            assert defective_kreweras(d, n, lam) == defective_kreweras_via_paths(d, n, lam)


def test_too_many_parts():
    assert defective_kreweras_via_paths(0, 1, L((1, 1, 1))) == 0
    assert defective_kreweras(0, 1, L((1, 1, 1))) == 0


def test_bad_arguments():
    with pytest.raises(PreconditionError):
        defective_kreweras(-1, 3, L((1,)))
    with pytest.raises(PreconditionError):
        frobenius_char(0, 2)


def test_frobenius_smallest():
    f = frobenius_char(1, 1)
    assert f.poly(L((1,))) == [1, 1]
    assert f == frobenius_from_kreweras(1, 1)
    assert f.dimension(1) == 2


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("m", range(1, 6))
def test_frobenius_two_ways(m, n):
    f = frobenius_char(m, n)
    assert f == frobenius_from_kreweras(m, n)
    # t = 1 and full orbit expansion recovers every list in [n+1]^m
    assert f.dimension(1) == (n + 1) ** m


def test_frobenius_json_roundtrip():
    f = frobenius_char(3, 2)
    g = GradedFrobenius.from_json(f.to_json())
    assert g == f
    assert all(isinstance(c, str) for term in f.to_json()["terms"] for c in term["poly"])


def test_vanishing_examples():
    assert check_vanishing(L((1, 1, 1)), 1).passed
    report = check_vanishing(L((2, 1)), 3)
    assert report.passed and not report.witnesses


@pytest.mark.parametrize("m", range(1, 6))
@pytest.mark.parametrize("n", range(1, 7))
def test_vanishing_holds(m, n):
    for lam in partitions_of(m):
        assert check_vanishing(lam, n).passed


def test_literal_vanishing_bound_fails_with_many_spots():
    # two singleton parts, five spots: a list like (1, 4) has predefect 2 > m-k+1 = 1
    report = check_vanishing(L((1, 1)), 5)
    assert report.passed
    assert (2, defective_kreweras(2, 5, L((1, 1)))) in report.literal_witnesses
    assert defective_kreweras(2, 5, L((1, 1))) > 0


def test_conjecture_formula_examples():
    assert conjecture_formula(1, 1, L((1,))) == 1
    assert conjecture_formula(2, 5, L((2, 1))) == defective_kreweras(2, 5, L((2, 1)))
    for lam in partitions_of(4):
        assert conjecture_formula(0, 3, lam) == classical_kreweras(lam)
    with pytest.raises(PreconditionError):
        conjecture_formula(2, 3, L((2, 1)))


def test_non_integer_error_carries_value():
    err = NonIntegerError(__import__("fractions").Fraction(1, 2), 1, 1, L((1,)))
    assert err.value.denominator == 2


def test_check_conjecture_small():
    report = check_conjecture(3, 2, 1)
    assert report.passed
    assert report.cases_checked == 6 * 3 * 2
    assert check_conjecture(0, 2, 1).cases_checked == 0


def test_check_conjecture_parallel_matches_serial():
    a = check_conjecture(4, 2, 1)
    b = check_conjecture(4, 2, 1, jobs=2)
    assert a.to_json() == b.to_json()
