import pytest
from hypothesis import given

from dpf.core import PreconditionError, PreferenceList
from dpf.partitions import Partition
from dpf.paths import (
    LabeledLatticePath,
    LatticePath,
    all_paths,
    conjugate,
    dip,
    labeled_path_from_prefs,
    path_from_prefs,
    prefs_from_labeled_path,
    prefs_from_path,
    runs,
)

from conftest import nondecreasing_lists, preference_lists

W_CARS = "NNENENEENNEN"
W_SPOTS = "ENEENNENENEE"


def test_path_from_prefs():
    assert path_from_prefs(PreferenceList(5, (1, 1, 2, 3, 5, 5, 6))).word == W_CARS
    assert path_from_prefs(PreferenceList(7, (2, 4, 4, 5, 6))).word == W_SPOTS
    assert path_from_prefs(PreferenceList(4, (1, 1, 1))).word == "NNNEEEE"


def test_prefs_from_path():
    w = LatticePath(W_SPOTS)
    assert (w.n, w.m) == (7, 5)
    assert prefs_from_path(w) == PreferenceList(7, (2, 4, 4, 5, 6))
    assert prefs_from_path(LatticePath(W_CARS)) == PreferenceList(5, (1, 1, 2, 3, 5, 5, 6))
    assert prefs_from_path(LatticePath("NNNEE")).prefs == (1, 1, 1)


@pytest.mark.parametrize("word, expected", [
    (W_SPOTS, 2),
    ("NNNEEE", 0),
    ("EEENN", 3),
    ("NEEEE", 0),  # trailing east steps are not measured
])
def test_dip(word, expected):
    assert dip(LatticePath(word)) == expected


def test_runs():
    assert runs(LatticePath(W_SPOTS)) == Partition((2, 1, 1, 1))
    assert runs(LatticePath("NNNNEE")) == Partition((4,))
    assert runs(LatticePath("NE" * 4)) == Partition((1, 1, 1, 1))


def test_conjugate():
    assert conjugate(LatticePath(W_CARS)).word == W_SPOTS
    assert conjugate(LatticePath("NNNEE")).word == "NNEEE"


def test_bad_word():
    with pytest.raises(PreconditionError):
        LatticePath("NXE")


def test_path_needs_sorted_list():
    with pytest.raises(PreconditionError):
        path_from_prefs(PreferenceList(3, (2, 1)))


def test_labeled_path_example():
    lp = labeled_path_from_prefs(PreferenceList(9, (9, 3, 5, 6, 10, 9, 5)))
    assert lp.labels == (2, 3, 7, 4, 1, 6, 5)
    assert lp.path == path_from_prefs(PreferenceList(9, (3, 5, 5, 6, 9, 9, 10)))
    assert prefs_from_labeled_path(lp).prefs == (9, 3, 5, 6, 10, 9, 5)
    ident = LabeledLatticePath(lp.path, tuple(range(1, 8)))
    assert prefs_from_labeled_path(ident).prefs == (3, 5, 5, 6, 9, 9, 10)


def test_labeled_path_validation():
    w = LatticePath("NNE")
    with pytest.raises(PreconditionError):
        LabeledLatticePath(w, (2, 1))
    with pytest.raises(PreconditionError):
        LabeledLatticePath(w, (1, 1))
    lp = LabeledLatticePath(LatticePath("NEN"), (2, 1))
    assert LabeledLatticePath.from_json(lp.to_json()) == lp


def test_single_car():
    pl = PreferenceList(1, (1,))
    assert prefs_from_labeled_path(labeled_path_from_prefs(pl)) == pl


def test_all_paths_count():
    assert len(list(all_paths(4, 3))) == 35
    assert len(set(all_paths(3, 3))) == 20


@given(nondecreasing_lists())
def test_path_roundtrip(pl):
    w = path_from_prefs(pl)
    assert (w.n, w.m) == (pl.n, pl.m)
    assert prefs_from_path(w) == pl
    assert conjugate(conjugate(w)) == w


@given(nondecreasing_lists())
def test_sorted_list_has_identity_labels(pl):
    assert labeled_path_from_prefs(pl).labels == tuple(range(1, pl.m + 1))


@given(preference_lists())
def test_labeled_roundtrip(pl):
    assert prefs_from_labeled_path(labeled_path_from_prefs(pl)) == pl


@given(nondecreasing_lists())
def test_dip_is_predefect(pl):
    # dip measures the largest excess x_i - i, floored at zero
    gamma = max(v - i for i, v in enumerate(pl.prefs, start=1))
    assert dip(path_from_prefs(pl)) == max(gamma, 0)
