"""Acceptance checks, shared by ``dpf verify-all`` and the test suite.

Each check returns a :class:`CheckResult`. ``scale="full"`` uses the
acceptance bounds; ``scale="small"`` shrinks them for a quick smoke run.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from itertools import combinations_with_replacement, permutations, product
from math import comb
from typing import Callable

from dpf.bijections import (
    DecrementPair,
    FixedPair,
    conjugate_prefs,
    from_tableau,
    phi,
    phi_inv,
    psi,
    psi_inv,
    rho,
    rho_inv,
    to_tableau,
)
from dpf.core import (
    PreferenceList,
    decrement_set,
    defect,
    defect_profile,
    fixed_set,
    simulate,
)
from dpf.enumeration import (
    count_dpf_orbit_sum,
    count_nondecreasing,
    count_pf,
    defect_distribution,
    enumerate_dpf_nondecreasing,
    in_defect_range,
)
from dpf.kreweras import (
    check_conjecture,
    check_vanishing,
    classical_kreweras,
    defective_kreweras,
    defective_kreweras_via_paths,
    frobenius_char,
    frobenius_from_kreweras,
    partitions_of,
)
from dpf.partitions import Partition
from dpf.tableaux import count_syt, enumerate_syt


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:2d} {self.name}: {self.detail} ({self.seconds:.1f}s)"


BOUNDS = {
    "full": {"sim": 5, "bij": 5, "conj": 6, "card": 7, "syt": 6, "cat": 10, "krew0": 8,
             "dual": 7, "frob": 6, "van": 7, "conjecture": (6, 3, 2), "orbit": 5},
    "small": {"sim": 4, "bij": 4, "conj": 4, "card": 5, "syt": 4, "cat": 10, "krew0": 6,
              "dual": 5, "frob": 4, "van": 5, "conjecture": (4, 2, 1), "orbit": 4},
}


def _nondecreasing(m: int, n: int):
    for x in combinations_with_replacement(range(1, n + 2), m):
        yield PreferenceList(n, x)


def _chk(number: int, name: str):
    def wrap(fn: Callable[[dict], tuple[bool, str]]):
        def run(scale: str = "full") -> CheckResult:
            start = time.perf_counter()
            passed, detail = fn(BOUNDS[scale])
            return CheckResult(number, name, passed, detail, time.perf_counter() - start)
        run.number = number
        run.__name__ = fn.__name__
        return run
    return wrap


@_chk(1, "closed-form defect matches simulation")
def oracle_equivalence(b: dict) -> tuple[bool, str]:
    checked = 0
    for m in range(1, b["sim"] + 1):
        for n in range(1, b["sim"] + 1):
            for x in product(range(1, n + 2), repeat=m):
                pl = PreferenceList(n, x)
                if defect(pl) != simulate(pl).defect:
                    return False, f"mismatch at n={n}, x={x}"
                checked += 1
    return True, f"{checked} lists"


@_chk(2, "simulated defect is invariant under rearrangement")
def rearrangement_invariance(b: dict) -> tuple[bool, str]:
    orbits = 0
    for m in range(1, b["sim"] + 1):
        for n in range(1, b["sim"] + 1):
            for rep in _nondecreasing(m, n):
                base = simulate(rep).defect
                for y in set(permutations(rep.prefs)):
                    if simulate(PreferenceList(n, y)).defect != base:
                        return False, f"orbit of {rep} (n={n}) not constant at {y}"
                orbits += 1
    return True, f"{orbits} full orbits"


@_chk(3, "worked examples")
def worked_examples(b: dict) -> tuple[bool, str]:
    x = PreferenceList(9, (3, 5, 5, 6, 9, 9, 10))
    ok = (
        defect(x) == 2
        and simulate(x).defect == 2
        and defect_profile(x).defect_seq == (0, 1, 0, 0, 2, 1, 1)
        and decrement_set(PreferenceList(6, (1, 1, 3, 6, 6, 6))) == {1, 3, 4}
        and fixed_set(PreferenceList(5, (1, 1, 2, 3, 5))) == {1, 5}
    )
    return ok, "defect/delta, D and F examples"


PHI_ROWS = {  # x: (delta, D, phi(x))
    (1, 4, 4): ((0, 2, 1), {1, 2}, ((1, 3, 3), 2)),
    (2, 4, 4): ((1, 2, 1), {1}, ((1, 3, 3), 1)),
    (3, 3, 3): ((2, 1, 0), {1}, ((2, 2, 2), 1)),
    (3, 3, 4): ((2, 1, 1), {1}, ((2, 2, 3), 1)),
    (3, 4, 4): ((2, 2, 1), {1}, ((2, 3, 3), 1)),
}

PSI_ROWS = {
    (1, 1, 1, 1): ((1, 1, 1), 1),
    (1, 1, 1, 2): ((1, 1, 2), 1),
    (1, 1, 1, 3): ((1, 1, 3), 1),
    (1, 1, 2, 2): ((1, 2, 2), 1),
    (1, 1, 2, 3): ((1, 2, 3), 1),
    (1, 1, 3, 3): ((1, 1, 3), 3),
    (1, 2, 2, 2): ((1, 2, 2), 2),
    (1, 2, 2, 3): ((1, 2, 3), 2),
    (1, 2, 3, 3): ((1, 2, 3), 3),
}


@_chk(4, "tables for DPF↑_{3,3,2}, phi and psi")
def table_reproduction(b: dict) -> tuple[bool, str]:
    listed = [pl.prefs for pl in enumerate_dpf_nondecreasing(3, 3, 2)]
    if listed != list(PHI_ROWS):
        return False, f"DPF↑_3,3,2 = {listed}"
    for x, (delta, dset, (image, i)) in PHI_ROWS.items():
        pl = PreferenceList(3, x)
        pair = phi(pl)
        if (defect_profile(pl).defect_seq, decrement_set(pl)) != (delta, dset):
            return False, f"delta/D row for {x}"
        if (pair.list.prefs, pair.index) != (image, i):
            return False, f"phi{x} = {pair}"
    domain = [pl for pl in _nondecreasing(4, 4) if defect(pl) == 0 and pl.prefs[-1] <= 3]
    if [pl.prefs for pl in domain] != list(PSI_ROWS):
        return False, "PF↑_4,4(x_4 <= 3) differs from the table"
    for pl in domain:
        pair = psi(pl)
        if (pair.list.prefs, pair.index) != PSI_ROWS[pl.prefs]:
            return False, f"psi{pl.prefs} = {pair}"
    return True, "5 + 5 + 9 rows"


@_chk(5, "rho chain for (1,1,3,5,7,7)")
def rho_chain(b: dict) -> tuple[bool, str]:
    x = PreferenceList(6, (1, 1, 3, 5, 7, 7))
    first = phi(x)
    second = phi(first.list)
    ok = (
        (first.list.prefs, first.index) == ((1, 1, 3, 4, 6, 6), 4)
        and (second.list.prefs, second.index) == ((1, 1, 3, 4, 5, 5), 5)
        and psi_inv(FixedPair(second.list, 5)).prefs == (1, 1, 3, 4, 5, 5, 5)
        and rho(x, 7).prefs == (1, 1, 3, 4, 4, 5, 5, 5)
        and rho_inv(rho(x, 7), 6, 2, 7) == x
    )
    return ok, "phi i=4, i=5; psi_inv i=5, i=4"


@_chk(6, "phi, psi and rho are bijections with D = F")
def bijection_suite(b: dict) -> tuple[bool, str]:
    top = b["bij"]
    cases = 0
    for n in range(1, top + 1):
        by_defect = {d: [pl for pl in _nondecreasing(n, n) if defect(pl) == d]
                     for d in range(n + 1)}
        parking = {d: [pl for pl in _nondecreasing(n + d, n + d) if defect(pl) == 0]
                   for d in range(4)}
        for k in range(1, n + 2):
            for d in range(1, min(3, n) + 1):
                dom = [x for x in by_defect[d] if x.prefs[-1] <= k]
                cod = {(y.prefs, i) for y in by_defect[d - 1] if y.prefs[-1] <= k - 1
                       for i in decrement_set(y)}
                image = set()
                for x in dom:
                    p = phi(x)
                    image.add((p.list.prefs, p.index))
                    if phi_inv(p) != x:
                        return False, f"phi_inv(phi({x})) != x"
                    if decrement_set(x) != {j for j in decrement_set(p.list) if j <= p.index}:
                        return False, f"decrement-set relation fails at {x}"
                if image != cod or len(image) != len(dom):
                    return False, f"phi not onto N_{n},{d - 1} at k={k}"
                for prefs, i in cod:
                    pair = DecrementPair(PreferenceList(n, prefs), i)
                    q = phi(phi_inv(pair))
                    if (q.list, q.index) != (pair.list, pair.index):
                        return False, f"phi(phi_inv({pair})) != pair"
                cases += len(dom)
            for d in range(0, 4):
                dom = [x for x in by_defect.get(d, []) if x.prefs[-1] <= k]
                cod = {pl.prefs for pl in parking[d] if pl.prefs[-1] <= k - d}
                image = set()
                for x in dom:
                    y = rho(x, k)
                    image.add(y.prefs)
                    if decrement_set(x) != fixed_set(y):
                        return False, f"D({x}) != F(rho(x))"
                    if rho_inv(y, n, d, k) != x:
                        return False, f"rho_inv(rho({x})) != x"
                if image != cod or len(image) != len(dom):
                    return False, f"rho not onto at n={n}, d={d}, k={k}"
                cases += len(dom)
        # psi on lists of length n+1
        for k in range(1, n + 1):
            dom = [pl for pl in _nondecreasing(n + 1, n + 1)
                   if defect(pl) == 0 and pl.prefs[-1] <= k]
            cod = {(y.prefs, i) for y in _nondecreasing(n, n)
                   if defect(y) == 0 and y.prefs[-1] <= k for i in fixed_set(y)}
            image = set()
            for x in dom:
                p = psi(x)
                image.add((p.list.prefs, p.index))
                if psi_inv(p) != x:
                    return False, f"psi_inv(psi({x})) != x"
                if fixed_set(x) != {j for j in fixed_set(p.list) if j <= p.index}:
                    return False, f"fixed-set relation fails at {x}"
            if image != cod or len(image) != len(dom):
                return False, f"psi not onto M_{n} at k={k}"
            cases += len(dom)
    return True, f"{cases} domain elements, n <= {top}"


@_chk(7, "conjugation is an involution shifting defect by n-m")
def conjugation(b: dict) -> tuple[bool, str]:
    count = 0
    for m in range(1, b["conj"] + 1):
        for n in range(1, b["conj"] + 1):
            for pl in _nondecreasing(m, n):
                c = conjugate_prefs(pl)
                if (c.m, c.n) != (n, m) or conjugate_prefs(c) != pl:
                    return False, f"involution fails at {pl}"
                if defect(c) != defect(pl) + (n - m):
                    return False, f"defect shift fails at {pl}"
                count += 1
    conj = conjugate_prefs(PreferenceList(5, (1, 1, 2, 3, 5, 5, 6)))
    return conj == PreferenceList(7, (2, 4, 4, 5, 6)), f"{count} lists; conjugate {conj}"


@_chk(8, "nondecreasing counts match tableaux; to_tableau is bijective")
def tableau_cardinality(b: dict) -> tuple[bool, str]:
    for m in range(1, b["card"] + 1):
        for n in range(1, b["card"] + 1):
            for d in range(max(m - n, 0), m + 1):
                listed = list(enumerate_dpf_nondecreasing(m, n, d))
                hook = count_syt(n + d, m - d)
                if not len(listed) == hook == count_nondecreasing(m, n, d).formula_value:
                    return False, f"count mismatch at m={m}, n={n}, d={d}"
                if m <= b["syt"] and n <= b["syt"]:
                    images = [to_tableau(x) for x in listed]
                    if set(images) != set(enumerate_syt(n + d, m - d)) or len(set(images)) != hook:
                        return False, f"to_tableau not bijective at m={m}, n={n}, d={d}"
                    if any(from_tableau(t, m, n) != x for t, x in zip(images, listed)):
                        return False, f"from_tableau not inverse at m={m}, n={n}, d={d}"
    return True, f"counts m,n <= {b['card']}; bijection m,n <= {b['syt']}"


@_chk(9, "Catalan specialisation")
def catalan(b: dict) -> tuple[bool, str]:
    ok = all(count_nondecreasing(n, n, 0).formula_value == comb(2 * n, n) // (n + 1)
             for n in range(1, b["cat"] + 1))
    return ok, f"n <= {b['cat']}"


@_chk(10, "defective Kreweras values")
def kreweras_values(b: dict) -> tuple[bool, str]:
    lam = Partition((2, 1))
    if [defective_kreweras(d, 3, lam) for d in range(3)] != [3, 5, 4]:
        return False, "Krew_{d,3}(2,1) != (3, 5, 4)"
    for m in range(1, b["krew0"] + 1):
        total = 0
        for lam in partitions_of(m):
            value = defective_kreweras(0, m, lam)
            if value != classical_kreweras(lam):
                return False, f"Krew_0,{m}({lam}) != Krew({lam})"
            total += value
        if total != comb(2 * m, m) // (m + 1):
            return False, f"sum over partitions of {m} is not Catalan"
    return True, f"m <= {b['krew0']}"


@_chk(11, "Kreweras numbers by lists and by lattice paths agree")
def dual_kreweras(b: dict) -> tuple[bool, str]:
    cases = 0
    for m in range(1, b["dual"] + 1):
        for lam in partitions_of(m):
            for n in range(1, b["dual"] + 1):
                for d in range(0, n + 1):
                    if defective_kreweras(d, n, lam) != defective_kreweras_via_paths(d, n, lam):
                        return False, f"mismatch d={d}, n={n}, lambda={lam}"
                    cases += 1
    return True, f"{cases} cases"


@_chk(12, "Frobenius characteristic: two constructions and specialisations")
def frobenius(b: dict) -> tuple[bool, str]:
    top = b["frob"]
    for m in range(1, top + 1):
        for n in range(1, top + 1):
            ch = frobenius_char(m, n)
            if ch != frobenius_from_kreweras(m, n):
                return False, f"constructions differ at m={m}, n={n}"
            if sum(ch.at(1).values()) != comb(m + n, n):
                return False, f"t=1 composition count at m={m}, n={n}"
            if ch.dimension(1) != (n + 1) ** m:
                return False, f"t=1 dimension at m={m}, n={n}"
            if m <= n and ch.dimension(0) != count_pf(m, n):
                return False, f"t=0 dimension at m={m}, n={n}"
    return True, f"m, n <= {top}"


@_chk(13, "vanishing of defective Kreweras numbers")
def vanishing(b: dict) -> tuple[bool, str]:
    literal = 0
    for m in range(1, b["van"] + 1):
        for lam in partitions_of(m):
            for n in range(1, b["van"] + 1):
                report = check_vanishing(lam, n)
                if not report.passed:
                    return False, f"lambda={lam}, n={n}: {report.witnesses}"
                literal += bool(report.literal_witnesses)
    return True, f"m, n <= {b['van']}; {literal} (lambda, n) with n > m exceed m-k+1 in the predefect grading"


@_chk(14, "defective Kreweras conjecture sweep")
def conjecture(b: dict) -> tuple[bool, str]:
    max_m, max_d, n_extra = b["conjecture"]
    report = check_conjecture(max_m, max_d, n_extra)
    json.dumps(report.to_json())
    verdict = "no mismatches" if report.passed else f"{len(report.mismatches)} mismatches"
    return True, f"{report.cases_checked} cases, {verdict}"


@_chk(15, "orbit sums match brute-force counts")
def orbit_sums(b: dict) -> tuple[bool, str]:
    top = b["orbit"]
    for m in range(1, top + 1):
        for n in range(1, top + 1):
            brute = defect_distribution(m, n)
            total = 0
            for d in range(0, m + 1):
                value = count_dpf_orbit_sum(m, n, d).formula_value
                if value != brute.get(d, 0):
                    return False, f"m={m}, n={n}, d={d}: {value} != {brute.get(d, 0)}"
                if not in_defect_range(m, n, d) and value:
                    return False, f"nonzero count outside defect range at m={m}, n={n}, d={d}"
                total += value
            if total != (n + 1) ** m:
                return False, f"sum over defects at m={m}, n={n}"
    return True, f"m, n <= {top}"


CHECKS = [
    oracle_equivalence, rearrangement_invariance, worked_examples, table_reproduction,
    rho_chain, bijection_suite, conjugation, tableau_cardinality, catalan,
    kreweras_values, dual_kreweras, frobenius, vanishing, conjecture, orbit_sums,
]


def run_all(scale: str = "full", echo: Callable[[str], None] | None = None) -> list[CheckResult]:
    results = []
    for check in CHECKS:
        result = check(scale)
        if echo is not None:
            echo(result.line())
        results.append(result)
    return results
