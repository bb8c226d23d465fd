import pytest
from hypothesis import given, strategies as st

from dpf.bijections import (
    DecrementPair,
    FixedPair,
    conjugate_prefs,
    from_restricted_pf,
    from_tableau,
    gamma_bij,
    pair_from_json,
    phi,
    phi_inv,
    psi,
    psi_inv,
    rho,
    rho_inv,
    sigma,
    sigma_inv,
    theta,
    theta_inv,
    to_restricted_pf,
    to_tableau,
)
from dpf.core import PreconditionError, PreferenceList, defect, fixed_set
from dpf.enumeration import enumerate_dpf_nondecreasing
from dpf.tableaux import TwoRowSYT, count_syt, enumerate_syt

from conftest import nondecreasing_lists


def P(*prefs, n=None):
    return PreferenceList(len(prefs) if n is None else n, prefs)


@pytest.mark.parametrize("x, y, i", [
    ((1, 4, 4), (1, 3, 3), 2),
    ((3, 3, 3), (2, 2, 2), 1),
    ((1, 1, 3, 5, 7, 7), (1, 1, 3, 4, 6, 6), 4),
])
def test_phi(x, y, i):
    pair = phi(P(*x))
    assert (pair.list.prefs, pair.index) == (y, i)
    assert phi_inv(pair) == P(*x)


def test_phi_inv():
    assert phi_inv(DecrementPair(P(1, 3, 3), 1)).prefs == (2, 4, 4)
    assert phi_inv(DecrementPair(P(1, 2, 3), 1)).prefs == (2, 3, 4)
    with pytest.raises(PreconditionError):
        DecrementPair(P(1, 4, 4), 3)


def test_phi_needs_defect():
    with pytest.raises(PreconditionError):
        phi(P(1, 1, 2))


@pytest.mark.parametrize("x, y, i", [
    ((1, 1, 3, 3), (1, 1, 3), 3),
    ((1, 2, 2, 3), (1, 2, 3), 2),
    ((1, 1, 1, 1), (1, 1, 1), 1),
])
def test_psi(x, y, i):
    pair = psi(P(*x))
    assert (pair.list.prefs, pair.index) == (y, i)
    assert psi_inv(pair) == P(*x)


def test_psi_inv():
    assert psi_inv(FixedPair(P(1, 1, 3, 4, 5, 5), 5)).prefs == (1, 1, 3, 4, 5, 5, 5)
    assert psi_inv(FixedPair(P(1, 1, 3, 4, 5, 5, 5), 4)).prefs == (1, 1, 3, 4, 4, 5, 5, 5)
    assert psi_inv(FixedPair(P(1), 1)).prefs == (1, 1)


def test_psi_rejects_large_last_entry():
    with pytest.raises(PreconditionError):
        psi(P(1, 2, 3))


def test_pair_json():
    pair = phi(P(1, 4, 4))
    assert pair_from_json(pair.to_json()) == pair
    fp = psi(P(1, 1, 3, 3))
    assert pair_from_json(fp.to_json(), FixedPair) == fp


def test_rho_chain():
    x = P(1, 1, 3, 5, 7, 7)
    y = rho(x, 7)
    assert y.prefs == (1, 1, 3, 4, 4, 5, 5, 5)
    assert rho_inv(y, 6, 2, 7) == x


def test_rho_identity_on_parking_functions():
    for pl in enumerate_dpf_nondecreasing(4, 4, 0):
        assert rho(pl, 5) == pl


def test_rho_small():
    y = rho(P(1, 4, 4), 4)
    assert y.m == 5 and y.is_nondecreasing()
    assert defect(y) == 0 and y.prefs[-1] <= 2
    assert fixed_set(y) == {1, 2}


def test_rho_domain():
    with pytest.raises(PreconditionError):
        rho(P(1, 4, 4), 3)
    with pytest.raises(PreconditionError):
        rho(P(1, 1, 3), 5)


@pytest.mark.parametrize("n", range(1, 6))
def test_rho_bijective_for_every_k(n):
    for d in range(n + 1):
        parking = [pl for pl in enumerate_dpf_nondecreasing(n + d, n + d, 0)]
        for k in range(1, n + 2):
            domain = [pl for pl in enumerate_dpf_nondecreasing(n, n, d) if pl.prefs[-1] <= k]
            image = {rho(pl, k) for pl in domain}
            codomain = {pl for pl in parking if pl.prefs[-1] <= k - d}
            assert len(image) == len(domain)
            assert image == codomain


def test_theta():
    assert theta(P(1, 1, n=1)).prefs == (1, 1)
    assert theta(P(2, 2, n=1)).prefs == (1, 1, 1)
    assert theta_inv(P(1, 1, 1), 2, 1, 2) == P(2, 2, n=1)


def test_conjugate_prefs():
    assert conjugate_prefs(P(1, 1, 2, 3, 5, 5, 6, n=5)) == P(2, 4, 4, 5, 6, n=7)
    assert conjugate_prefs(P(1, 1, 1, n=4)) == P(1, 1, 1, 1, n=3)


@given(nondecreasing_lists())
def test_conjugation_is_an_involution(pl):
    assert conjugate_prefs(conjugate_prefs(pl)) == pl


def test_gamma_needs_fewer_cars():
    with pytest.raises(PreconditionError):
        gamma_bij(P(1, 1, n=2))
    with pytest.raises(PreconditionError):
        theta(P(1, 1, n=2))


def test_to_tableau_examples():
    assert to_tableau(P(1, 2, 3, 4)) == TwoRowSYT((1, 3, 5, 7), (2, 4, 6, 8))
    assert to_tableau(P(1, 1)) == TwoRowSYT((1, 2), (3, 4))
    assert to_tableau(P(1, 4, 4)).shape == (5, 1)


def test_from_tableau():
    pl = from_tableau(TwoRowSYT((1, 2, 4), (3, 5, 6)), 3, 3)
    assert defect(pl) == 0
    top = from_tableau(TwoRowSYT((1, 2, 3, 4, 5)), 3, 2)
    assert top == P(3, 3, 3, n=2)
    with pytest.raises(PreconditionError):
        from_tableau(TwoRowSYT((1, 2), (3, 4)), 3, 3)
    with pytest.raises(PreconditionError):
        from_tableau(TwoRowSYT((2, 3), (1, 4)), 2, 2)


def test_sigma_roundtrip_on_restricted():
    pf = P(1, 1, 2, 3, 3)
    t = sigma(pf, 3)
    assert t.shape == (5, 2)
    assert sigma_inv(t) == pf


@pytest.mark.parametrize("m", range(1, 6))
@pytest.mark.parametrize("n", range(1, 6))
def test_composite_is_bijective(m, n):
    for d in range(max(m - n, 0), m + 1):
        lists = list(enumerate_dpf_nondecreasing(m, n, d))
        tableaux = [to_tableau(pl) for pl in lists]
        assert len(set(tableaux)) == len(lists) == count_syt(n + d, m - d)
        assert set(tableaux) == set(enumerate_syt(n + d, m - d))
        for pl, t in zip(lists, tableaux):
            assert from_tableau(t, m, n) == pl
            assert from_restricted_pf(to_restricted_pf(pl), m, n) == pl


@given(nondecreasing_lists(max_m=6, max_n=6))
def test_restricted_pf_codomain(pl):
    d = defect(pl)
    pf = to_restricted_pf(pl)
    assert pf.m == pf.n == pl.n + d
    assert defect(pf) == 0
    assert pf.prefs[-1] <= pl.m + 1 - d
