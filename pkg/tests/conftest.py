from itertools import combinations_with_replacement, product

import pytest
from hypothesis import settings, strategies as st

from dpf.core import PreferenceList

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


@st.composite
def preference_lists(draw, max_m=7, max_n=7, min_m=1):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(min_m, max_m))
    prefs = draw(st.lists(st.integers(1, n + 1), min_size=m, max_size=m))
    return PreferenceList(n, tuple(prefs))


@st.composite
def nondecreasing_lists(draw, max_m=7, max_n=7):
    pl = draw(preference_lists(max_m, max_n))
    return pl.sorted()


def all_lists(m, n):
    return [PreferenceList(n, x) for x in product(range(1, n + 2), repeat=m)]


def all_nondecreasing(m, n):
    return [PreferenceList(n, x) for x in combinations_with_replacement(range(1, n + 2), m)]


@pytest.fixture
def P():
    return PreferenceList
