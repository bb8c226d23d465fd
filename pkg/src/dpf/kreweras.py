"""Kreweras numbers, their defective refinement and the graded Frobenius characteristic.

``h_lambda`` is only ever a formal key here: a :class:`GradedFrobenius` maps each
partition to the integer coefficient list of a polynomial in ``t``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from dpf.core import PreconditionError, PreferenceList, defect, defect_profile, multinomial
from dpf.partitions import Partition, distinct_permutations, partitions_of, weak_compositions
from dpf.paths import all_paths, dip, runs

__all__ = [
    "GradedFrobenius",
    "NonIntegerError",
    "Partition",
    "VanishingReport",
    "ConjectureReport",
    "check_conjecture",
    "check_vanishing",
    "classical_kreweras",
    "conjecture_formula",
    "defective_kreweras",
    "defective_kreweras_via_paths",
    "frobenius_char",
    "frobenius_from_kreweras",
    "partitions_of",
]


class NonIntegerError(ArithmeticError):
    """The conjectured formula produced a non-integer value."""

    def __init__(self, value: Fraction, d: int, n: int, lam: Partition):
        super().__init__(f"conjectured Krew_{d},{n}({lam}) = {value} is not an integer")
        self.value = value


def _kreweras_multinomial(top: int, lam: Partition) -> int:
    k = lam.length
    return multinomial([top - k, *lam.multiplicities().values()])


def classical_kreweras(lam: Partition) -> int:
    """(1/(m+1)) * multinomial(m+1; m+1-k, mu_1, ..., mu_m)."""
    m = lam.size
    q, r = divmod(_kreweras_multinomial(m + 1, lam), m + 1)
    assert r == 0
    return q


def _lists_with_content(n: int, lam: Partition):
    """Nondecreasing tuples in [n+1]^m whose value multiplicities sort to ``lam``.

    Values a_1 < ... < a_k are chosen first; each distinct ordering of the
    parts then says how many copies of each value appear.
    """
    k = lam.length
    for values in combinations(range(1, n + 2), k):
        for sizes in distinct_permutations(lam.parts):
            x = []
            for a, s in zip(values, sizes):
                x.extend([a] * s)
            yield PreferenceList(n, tuple(x))


def defective_kreweras(d: int, n: int, lam: Partition) -> int:
    """Count lists with content ``lam`` in [n+1]^m having max(pdft, 0) = d."""
    if n < 1 or d < 0:
        raise PreconditionError(f"need n >= 1 and d >= 0, got n={n}, d={d}")
    return sum(1 for x in _lists_with_content(n, lam)
               if max(defect_profile(x).predefect, 0) == d)


@lru_cache(maxsize=None)
def _path_statistics(n: int, m: int) -> Counter:
    return Counter((dip(w), runs(w)) for w in all_paths(n, m))


def defective_kreweras_via_paths(d: int, n: int, lam: Partition) -> int:
    """Count (n, m)-lattice paths with dip ``d`` and north runs ``lam``."""
    if n < 1 or d < 0:
        raise PreconditionError(f"need n >= 1 and d >= 0, got n={n}, d={d}")
    return _path_statistics(n, lam.size)[(d, lam)]


@dataclass
class GradedFrobenius:
    """Coefficients ``a_{lambda,n}(t)`` of ``h_lambda``; ``coeffs[lam][d]`` is the t^d term."""

    m: int
    n: int
    coeffs: dict[Partition, list[int]] = field(default_factory=dict)

    def add(self, lam: Partition, d: int, amount: int = 1) -> None:
        poly = self.coeffs.setdefault(lam, [])
        if len(poly) <= d:
            poly.extend([0] * (d + 1 - len(poly)))
        poly[d] += amount

    def poly(self, lam: Partition) -> list[int]:
        return list(self.coeffs.get(lam, []))

    def normalized(self) -> dict[Partition, tuple[int, ...]]:
        out = {}
        for lam, poly in self.coeffs.items():
            p = list(poly)
            while p and p[-1] == 0:
                p.pop()
            if p:
                out[lam] = tuple(p)
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedFrobenius):
            return NotImplemented
        return (self.m, self.n, self.normalized()) == (other.m, other.n, other.normalized())

    def at(self, t: int) -> dict[Partition, int]:
        """Specialise the grading variable."""
        return {lam: sum(c * t**d for d, c in enumerate(p)) for lam, p in self.normalized().items()}

    def dimension(self, t: int) -> int:
        """Expand each h_lambda into the size of its orbit, m!/prod(lambda_i!)."""
        return sum(c * multinomial(lam.parts) for lam, c in self.at(t).items())

    def to_json(self) -> dict:
        terms = [
            {"lambda": list(lam.parts), "poly": [str(c) for c in poly]}
            for lam, poly in sorted(self.normalized().items(), reverse=True)
        ]
        return {"m": self.m, "n": self.n, "terms": terms}

    @classmethod
    def from_json(cls, data: dict) -> GradedFrobenius:
        out = cls(int(data["m"]), int(data["n"]))
        for term in data["terms"]:
            out.coeffs[Partition(tuple(term["lambda"]))] = [int(c) for c in term["poly"]]
        return out


def frobenius_char(m: int, n: int) -> GradedFrobenius:
    """Sum t^dft(x(alpha)) h_alpha over weak compositions alpha of m into n+1 parts."""
    if m < 1 or n < 1:
        raise PreconditionError(f"need m, n >= 1, got m={m}, n={n}")
    out = GradedFrobenius(m, n)
    for alpha in weak_compositions(m, n + 1):
        x = []
        for value, count in enumerate(alpha, start=1):
            x.extend([value] * count)
        out.add(Partition.from_multiset(alpha), defect(PreferenceList(n, tuple(x))))
    return out


def frobenius_from_kreweras(m: int, n: int) -> GradedFrobenius:
    """Assemble the same characteristic from defective Kreweras numbers.

    Since dft = max(pdft + m - n, 0), the constant term collects predefects
    0..n-m (none when m > n) and the t^d term for d >= 1 is Krew_{d+n-m,n}.
    """
    if m < 1 or n < 1:
        raise PreconditionError(f"need m, n >= 1, got m={m}, n={n}")
    out = GradedFrobenius(m, n)
    for lam in partitions_of(m):
        krew = [defective_kreweras(e, n, lam) for e in range(n + 1)]
        c0 = sum(krew[:max(n - m + 1, 0)])
        if c0:
            out.add(lam, 0, c0)
        for d in range(1, m + 1):
            e = d + n - m
            if 0 <= e <= n and krew[e]:
                out.add(lam, d, krew[e])
    return out


@dataclass
class VanishingReport:
    """Outcome of :func:`check_vanishing`.

    ``witnesses`` lists (d, value) pairs that contradict the proven bound.
    ``literal_witnesses`` lists nonzero Krew_{d,n} with m-k+1 < d <= m; these
    only arise for n > m, where that reading of the bound does not hold.
    """

    lam: Partition
    n: int
    passed: bool
    witnesses: list[tuple[int, int]]
    literal_witnesses: list[tuple[int, int]]

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam.parts),
            "n": self.n,
            "passed": self.passed,
            "witnesses": [{"d": d, "value": str(v)} for d, v in self.witnesses],
            "literal_witnesses": [{"d": d, "value": str(v)} for d, v in self.literal_witnesses],
        }


def check_vanishing(lam: Partition, n: int) -> VanishingReport:
    """Check where the defective Kreweras numbers of ``lam`` must vanish.

    With k parts: nothing survives when n < k-1. Otherwise the defect of any
    list with this content is at most m-k+1, which in the predefect grading
    means Krew_{d,n}(lam) = 0 for d > n-k+1.
    """
    m, k = lam.size, lam.length
    values = {d: defective_kreweras(d, n, lam) for d in range(n + 1)}
    if n < k - 1:
        witnesses = [(d, v) for d, v in values.items() if v]
    else:
        witnesses = [(d, v) for d, v in values.items() if d > n - k + 1 and v]
        per_defect = Counter()
        for x in _lists_with_content(n, lam):
            per_defect[defect(x)] += 1
        witnesses += [(d, v) for d, v in per_defect.items() if d > m - k + 1]
    literal = [(d, values.get(d, 0)) for d in range(m - k + 2, m + 1) if values.get(d, 0)]
    return VanishingReport(lam, n, not witnesses, witnesses, literal)


def conjecture_formula(d: int, n: int, lam: Partition) -> int:
    """((m+dk)/(m+d)) * (1/(m+d+1)) * multinomial(m+d+1; m+d+1-k, mu_1, ..., mu_m)."""
    m, k = lam.size, lam.length
    if n < d + m - 1:
        raise PreconditionError(f"formula applies for n >= d+m-1 = {d + m - 1}, got n={n}")
    value = Fraction(m + d * k, m + d) * Fraction(_kreweras_multinomial(m + d + 1, lam), m + d + 1)
    if value.denominator != 1:
        raise NonIntegerError(value, d, n, lam)
    return value.numerator


@dataclass
class ConjectureReport:
    cases_checked: int = 0
    mismatches: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def merge(self, other: ConjectureReport) -> ConjectureReport:
        return ConjectureReport(self.cases_checked + other.cases_checked,
                                self.mismatches + other.mismatches)

    def to_json(self) -> dict:
        return {"cases_checked": self.cases_checked, "mismatches": self.mismatches}


def _conjecture_cases(max_m: int, max_d: int, n_extra: int):
    for m in range(1, max_m + 1):
        for lam in partitions_of(m):
            yield m, lam


def check_conjecture_partition(lam: Partition, max_d: int, n_extra: int) -> ConjectureReport:
    m = lam.size
    report = ConjectureReport()
    for d in range(max_d + 1):
        low = max(d + m - 1, 1)
        for n in range(low, low + n_extra + 1):
            actual = defective_kreweras(d, n, lam)
            try:
                expected: int | str = conjecture_formula(d, n, lam)
            except NonIntegerError as exc:
                expected = str(exc.value)
            report.cases_checked += 1
            if expected != actual:
                report.mismatches.append({
                    "m": m, "n": n, "d": d, "lambda": list(lam.parts),
                    "expected": str(expected), "actual": str(actual),
                })
    return report


def check_conjecture(max_m: int, max_d: int, n_extra: int, jobs: int = 1) -> ConjectureReport:
    """Compare the conjectured formula with enumeration on every case in range.

    Cases are all partitions of m <= max_m, d in 0..max_d and n from d+m-1
    (at least 1) up to n_extra beyond it. Mismatches are returned, not raised.
    """
    if max_m < 1 or max_d < 0 or n_extra < 0:
        return ConjectureReport()
    lams = [lam for _, lam in _conjecture_cases(max_m, max_d, n_extra)]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(check_conjecture_partition, lams,
                                  [max_d] * len(lams), [n_extra] * len(lams)))
    else:
        parts = [check_conjecture_partition(lam, max_d, n_extra) for lam in lams]
    report = ConjectureReport()
    for part in parts:
        report = report.merge(part)
    return report
