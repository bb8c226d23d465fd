"""Exhaustive generators and counting formulas for defective parking functions."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from math import comb
from typing import Iterator

from dpf.core import PreconditionError, PreferenceList, defect, orbit_size, simulate

COUNT_FORMULA = "(n-m+2d+1)/(n+d+1)*C(m+n,n+d)"
ORBIT_SUM_FORMULA = "sum over DPF-nondecreasing of m!/prod(l_v!)"
PF_FORMULA = "(n+1-m)*(n+1)^(m-1)"


@dataclass(frozen=True)
class CountReport:
    formula_value: int
    enumerated_value: int | None = None
    method: str = "formula"
    formula: str = COUNT_FORMULA

    @property
    def consistent(self) -> bool:
        return self.enumerated_value is None or self.enumerated_value == self.formula_value

    def to_json(self) -> dict:
        return {
            "formula": self.formula,
            "value": str(self.formula_value),
            "enumerated": None if self.enumerated_value is None else str(self.enumerated_value),
        }


def enumerate_dpf_nondecreasing(m: int, n: int, d: int) -> Iterator[PreferenceList]:
    """Nondecreasing elements of [n+1]^m with defect ``d``, lexicographically."""
    for x in combinations_with_replacement(range(1, n + 2), m):
        pl = PreferenceList(n, x)
        if defect(pl) == d:
            yield pl


def enumerate_dpf(m: int, n: int, d: int, first: int | None = None) -> Iterator[PreferenceList]:
    """Every element of [n+1]^m whose simulated defect is ``d``.

    ``first`` restricts to lists starting with that value, for sharding.
    """
    heads = range(1, n + 2) if first is None else (first,)
    for head in heads:
        for tail in product(range(1, n + 2), repeat=m - 1):
            pl = PreferenceList(n, (head,) + tail)
            if simulate(pl).defect == d:
                yield pl


def defect_distribution(m: int, n: int) -> Counter:
    """Simulated defect of every list in [n+1]^m, tallied."""
    return Counter(simulate(PreferenceList(n, x)).defect
                   for x in product(range(1, n + 2), repeat=m))


def in_defect_range(m: int, n: int, d: int) -> bool:
    return max(m - n, 0) <= d <= m


def nondecreasing_formula(m: int, n: int, d: int) -> int:
    if m < 1 or n < 1:
        raise PreconditionError(f"need m, n >= 1, got m={m}, n={n}")
    # outside the attainable defects the closed form can be nonzero (e.g. m=3, n=1, d=1)
    if not in_defect_range(m, n, d):
        return 0
    q, r = divmod((n - m + 2 * d + 1) * comb(m + n, n + d), n + d + 1)
    assert r == 0
    return q


def _count_shard(args: tuple[int, int, int, int | None]) -> int:
    m, n, d, first = args
    return sum(1 for _ in enumerate_dpf(m, n, d, first))


def count_dpf_bruteforce(m: int, n: int, d: int, jobs: int = 1) -> int:
    """|DPF_{m,n,d}| by simulating every list, optionally sharded by first entry."""
    shards = [(m, n, d, first) for first in range(1, n + 2)]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return sum(pool.map(_count_shard, shards))
    return sum(map(_count_shard, shards))


def count_nondecreasing(m: int, n: int, d: int, verify: bool = False) -> CountReport:
    value = nondecreasing_formula(m, n, d)
    enumerated = None
    if verify:
        enumerated = sum(1 for _ in enumerate_dpf_nondecreasing(m, n, d))
    return CountReport(value, enumerated, "enumeration" if verify else "formula", COUNT_FORMULA)


def count_dpf_orbit_sum(m: int, n: int, d: int, verify: bool = False, jobs: int = 1) -> CountReport:
    """|DPF_{m,n,d}| as a sum of orbit sizes; the multinomial counts value n+1 too."""
    value = sum(orbit_size(x) for x in enumerate_dpf_nondecreasing(m, n, d))
    enumerated = count_dpf_bruteforce(m, n, d, jobs) if verify else None
    return CountReport(value, enumerated, "orbit-sum", ORBIT_SUM_FORMULA)


def count_pf(m: int, n: int) -> int:
    if not 1 <= m <= n:
        raise PreconditionError(f"count_pf needs 1 <= m <= n, got m={m}, n={n}")
    return (n + 1 - m) * (n + 1) ** (m - 1)
