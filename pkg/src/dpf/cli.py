"""Command-line interface: ``dpf <command> [options]``.

Exit status: 0 success, 1 invalid input, 2 internal invariant violation,
3 when ``check-conjecture`` finds a mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from math import comb
from typing import Sequence

from dpf import bijections, core, enumeration, kreweras, paths, tableaux, verify
from dpf.core import InvariantError, PreconditionError, PreferenceList
from dpf.partitions import Partition

EXIT_OK, EXIT_INPUT, EXIT_INVARIANT, EXIT_MISMATCH = 0, 1, 2, 3
DEFAULT_MAX_CELLS = 10**8


class UsageError(Exception):
    pass


def _max_cells() -> int:
    raw = os.environ.get("DPF_MAX_CELLS")
    if raw is None:
        return DEFAULT_MAX_CELLS
    try:
        return int(float(raw))
    except ValueError:
        raise UsageError(f"DPF_MAX_CELLS must be an integer, got {raw!r}")


def _guard(cells: int, what: str) -> None:
    cap = _max_cells()
    if cells > cap:
        raise UsageError(f"{what} would visit {cells} states, above DPF_MAX_CELLS={cap}")


def _emit(args, text: str, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _csv(values) -> str:
    return ",".join(map(str, values))


def _prefs(args, default_square: bool = False) -> PreferenceList:
    n = args.n
    text = args.input
    if n is None and default_square and not text.lstrip().startswith("{"):
        n = len([t for t in text.split(",") if t.strip()])
    return PreferenceList.parse(text, n)


def _need(args, *names: str) -> None:
    missing = [f"-{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.command} needs {' '.join(missing)}")


# core --------------------------------------------------------------------

def cmd_defect(args) -> int:
    pl = _prefs(args)
    d = core.defect(pl)
    _emit(args, str(d), {**pl.to_json(), "defect": str(d)})
    return EXIT_OK


def cmd_simulate(args) -> int:
    pl = _prefs(args)
    out = core.simulate(pl)
    _emit(args, f"positions {_csv(out.positions)}\ndefect {out.defect}",
          {**pl.to_json(), "positions": list(out.positions), "defect": str(out.defect)})
    return EXIT_OK


def cmd_profile(args) -> int:
    pl = _prefs(args)
    p = core.defect_profile(pl)
    text = "\n".join([
        f"predefect_seq {_csv(p.predefect_seq)}",
        f"defect_seq {_csv(p.defect_seq)}",
        f"predefect {p.predefect}",
        f"defect {p.defect}",
    ])
    _emit(args, text, {**pl.to_json(), "predefect_seq": list(p.predefect_seq),
                       "defect_seq": list(p.defect_seq), "predefect": str(p.predefect),
                       "defect": str(p.defect)})
    return EXIT_OK


def cmd_orbit_size(args) -> int:
    pl = _prefs(args)
    size = core.orbit_size(pl)
    _emit(args, str(size), {**pl.to_json(), "orbit_size": str(size)})
    return EXIT_OK


def cmd_catalan_word(args) -> int:
    pl = _prefs(args, default_square=True)
    word = core.to_catalan_word(pl)
    _emit(args, _csv(word), {**pl.to_json(), "catalan_word": list(word)})
    return EXIT_OK


# paths -------------------------------------------------------------------

def cmd_path(args) -> int:
    w = paths.path_from_prefs(_prefs(args))
    _emit(args, w.word, {"word": w.word, "n": w.n, "m": w.m})
    return EXIT_OK


def cmd_dip(args) -> int:
    w = paths.LatticePath(args.input)
    d = paths.dip(w)
    _emit(args, str(d), {"word": w.word, "dip": str(d)})
    return EXIT_OK


def cmd_runs(args) -> int:
    w = paths.LatticePath(args.input)
    lam = paths.runs(w)
    _emit(args, str(lam), {"word": w.word, "runs": list(lam.parts)})
    return EXIT_OK


def cmd_conjugate(args) -> int:
    text = args.input.strip()
    if set(text.upper()) <= {"N", "E"}:
        w = paths.conjugate(paths.LatticePath(text))
        _emit(args, w.word, {"word": w.word, "n": w.n, "m": w.m})
    else:
        c = bijections.conjugate_prefs(_prefs(args))
        _emit(args, str(c), c.to_json())
    return EXIT_OK


def cmd_labeled_path(args) -> int:
    text = args.input.strip()
    if text.startswith("{") and '"word"' in text:
        pl = paths.prefs_from_labeled_path(paths.LabeledLatticePath.from_json(text))
        _emit(args, str(pl), pl.to_json())
    else:
        lp = paths.labeled_path_from_prefs(_prefs(args))
        _emit(args, json.dumps(lp.to_json()), lp.to_json())
    return EXIT_OK


# bijections --------------------------------------------------------------

def _pair_payload(pair) -> tuple[str, dict]:
    return f"{pair.list} {pair.index}", pair.to_json()


def cmd_phi(args) -> int:
    pl = _prefs(args, default_square=True)
    if args.inverse:
        _need(args, "index")
        out = bijections.phi_inv(bijections.DecrementPair(pl, args.index))
        _emit(args, str(out), out.to_json())
    else:
        _emit(args, *_pair_payload(bijections.phi(pl)))
    return EXIT_OK


def cmd_psi(args) -> int:
    pl = _prefs(args, default_square=True)
    if args.inverse:
        _need(args, "index")
        out = bijections.psi_inv(bijections.FixedPair(pl, args.index))
        _emit(args, str(out), out.to_json())
    else:
        _emit(args, *_pair_payload(bijections.psi(pl)))
    return EXIT_OK


def cmd_rho(args) -> int:
    if args.inverse:
        _need(args, "n", "d")
        pl = PreferenceList.parse(args.input, args.n + args.d)
        out = bijections.rho_inv(pl, args.n, args.d, args.k)
    else:
        pl = _prefs(args, default_square=True)
        out = bijections.rho(pl, args.k)
    _emit(args, str(out), out.to_json())
    return EXIT_OK


def cmd_theta(args) -> int:
    _need(args, "n")
    if args.inverse:
        _need(args, "m", "d")
        pl = PreferenceList.parse(args.input, args.n + args.d)
        out = bijections.theta_inv(pl, args.m, args.n, args.d)
    else:
        out = bijections.theta(_prefs(args))
    _emit(args, str(out), out.to_json())
    return EXIT_OK


def cmd_syt(args) -> int:
    _need(args, "n")
    t = bijections.to_tableau(_prefs(args))
    _emit(args, str(t), t.to_json())
    return EXIT_OK


def cmd_from_syt(args) -> int:
    _need(args, "m", "n")
    pl = bijections.from_tableau(tableaux.TwoRowSYT.parse(args.input), args.m, args.n)
    _emit(args, str(pl), pl.to_json())
    return EXIT_OK


# enumeration -------------------------------------------------------------

def cmd_enumerate(args) -> int:
    _need(args, "m", "n", "d")
    m, n, d = args.m, args.n, args.d
    if args.nondecreasing:
        _guard(comb(m + n, m), "enumeration")
        stream = enumeration.enumerate_dpf_nondecreasing(m, n, d)
    else:
        _guard((n + 1) ** m, "enumeration")
        stream = enumeration.enumerate_dpf(m, n, d)
    for pl in stream:
        print(json.dumps(pl.to_json()) if args.format == "json" else str(pl))
    return EXIT_OK


def _report_out(args, report: enumeration.CountReport) -> int:
    lines = [f"formula {report.formula_value}"]
    if report.enumerated_value is not None:
        lines.append(f"enumerated {report.enumerated_value}")
    _emit(args, "\n".join(lines), report.to_json())
    if not report.consistent:
        print(f"error: formula {report.formula_value} != enumeration {report.enumerated_value}",
              file=sys.stderr)
        return EXIT_INVARIANT
    return EXIT_OK


def cmd_count(args) -> int:
    _need(args, "m", "n", "d")
    m, n, d = args.m, args.n, args.d
    if args.orbit_sum:
        if args.verify:
            _guard((n + 1) ** m, "brute-force count")
        _guard(comb(m + n, m), "orbit sum")
        report = enumeration.count_dpf_orbit_sum(m, n, d, args.verify, args.jobs)
    else:
        if args.verify:
            _guard(comb(m + n, m), "enumeration")
        report = enumeration.count_nondecreasing(m, n, d, args.verify)
    return _report_out(args, report)


def cmd_count_pf(args) -> int:
    _need(args, "m", "n")
    value = enumeration.count_pf(args.m, args.n)
    _emit(args, str(value), {"formula": enumeration.PF_FORMULA, "value": str(value),
                             "enumerated": None})
    return EXIT_OK


# kreweras ----------------------------------------------------------------

def _partition(args) -> Partition:
    if args.partition is None:
        raise UsageError(f"{args.command} needs -p")
    try:
        return Partition.parse(args.partition)
    except ValueError as exc:
        raise PreconditionError(str(exc)) from exc


def cmd_kreweras(args) -> int:
    _need(args, "d", "n")
    lam = _partition(args)
    if args.via_paths:
        _guard(comb(args.n + lam.size, lam.size), "path enumeration")
        value = kreweras.defective_kreweras_via_paths(args.d, args.n, lam)
    else:
        _guard(comb(args.n + 1, lam.length) * core.multinomial(lam.multiplicities().values()),
               "list enumeration")
        value = kreweras.defective_kreweras(args.d, args.n, lam)
    _emit(args, str(value), {"d": args.d, "n": args.n, "lambda": list(lam.parts),
                             "value": str(value)})
    return EXIT_OK


def cmd_frobenius(args) -> int:
    _need(args, "m", "n")
    _guard(comb(args.m + args.n, args.n), "composition enumeration")
    if args.via_kreweras:
        ch = kreweras.frobenius_from_kreweras(args.m, args.n)
    else:
        ch = kreweras.frobenius_char(args.m, args.n)
    lines = []
    for lam, poly in sorted(ch.normalized().items(), reverse=True):
        terms = " + ".join(f"{c}*t^{d}" for d, c in enumerate(poly) if c)
        lines.append(f"h({lam}): {terms}")
    _emit(args, "\n".join(lines), ch.to_json())
    return EXIT_OK


def cmd_check_vanishing(args) -> int:
    _need(args, "n")
    report = kreweras.check_vanishing(_partition(args), args.n)
    text = "pass" if report.passed else f"fail {report.witnesses}"
    _emit(args, text, report.to_json())
    return EXIT_OK if report.passed else EXIT_INVARIANT


def cmd_check_conjecture(args) -> int:
    report = kreweras.check_conjecture(args.max_m, args.max_d, args.n_extra, args.jobs)
    if args.format == "json":
        print(json.dumps(report.to_json(), sort_keys=True))
    else:
        print(f"cases_checked {report.cases_checked}")
        print(f"mismatches {len(report.mismatches)}")
        for mm in report.mismatches:
            print(json.dumps(mm, sort_keys=True))
    return EXIT_OK if report.passed else EXIT_MISMATCH


def cmd_verify_all(args) -> int:
    if args.format == "json":
        results = verify.run_all(args.scale)
        print(json.dumps([{"criterion": r.number, "name": r.name, "passed": r.passed,
                           "detail": r.detail} for r in results], sort_keys=True))
    else:
        results = verify.run_all(args.scale, echo=lambda line: print(line, flush=True))
    return EXIT_OK if all(r.passed for r in results) else EXIT_INVARIANT


# parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")

    parser = argparse.ArgumentParser(prog="dpf", description="Defective parking functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, fn, help: str, inp: str | None = "comma-separated preferences or JSON",
            flags: str = ""):
        p = sub.add_parser(name, parents=[common], help=help, description=help)
        for flag in flags:
            p.add_argument(f"-{flag}", type=int, default=None)
        if inp is not None:
            p.add_argument("input", help=inp)
        p.set_defaults(fn=fn)
        return p

    add("defect", cmd_defect, "defect of a preference list", flags="n")
    add("simulate", cmd_simulate, "run the parking scheme", flags="n")
    add("profile", cmd_profile, "predefect and defect sequences", flags="n")
    add("orbit-size", cmd_orbit_size, "number of rearrangements", flags="n")
    add("catalan-word", cmd_catalan_word, "Catalan word of a nondecreasing parking function",
        flags="n")

    add("path", cmd_path, "lattice path of a nondecreasing list", flags="n")
    add("dip", cmd_dip, "dip of a lattice path", inp="path word over N and E")
    add("runs", cmd_runs, "north-run partition of a lattice path", inp="path word over N and E")
    add("conjugate", cmd_conjugate, "conjugate a path word or a nondecreasing list",
        inp="path word, or preferences with -n", flags="n")
    add("labeled-path", cmd_labeled_path,
        "labeled path of a list, or the list of a labeled path JSON", flags="n")

    for name, fn, help in (("phi", cmd_phi, "defect decrement map (m = n)"),
                           ("psi", cmd_psi, "fixed-point deletion map")):
        p = add(name, fn, help, flags="n")
        p.add_argument("--inverse", action="store_true")
        p.add_argument("--index", type=int, default=None)
    p = add("rho", cmd_rho, "m = n lists to parking functions of length n+d", flags="nd")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--inverse", action="store_true")
    p = add("theta", cmd_theta, "m > n lists to restricted parking functions", flags="mnd")
    p.add_argument("--inverse", action="store_true")
    add("syt", cmd_syt, "two-row standard Young tableau of a nondecreasing list", flags="n")
    add("from-syt", cmd_from_syt, "nondecreasing list of a tableau",
        inp='tableau "1,3/2,4" or JSON', flags="mn")

    p = add("enumerate", cmd_enumerate, "list DPF_{m,n,d} as lines", inp=None, flags="mnd")
    p.add_argument("--nondecreasing", action="store_true")
    p = add("count", cmd_count, "count nondecreasing lists of defect d", inp=None, flags="mnd")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--orbit-sum", action="store_true", help="count all of DPF_{m,n,d} instead")
    add("count-pf", cmd_count_pf, "number of (m,n)-parking functions", inp=None, flags="mn")

    p = add("kreweras", cmd_kreweras, "defective Kreweras number", inp=None, flags="dn")
    p.add_argument("-p", "--partition", default=None)
    p.add_argument("--via-paths", action="store_true")
    p = add("frobenius", cmd_frobenius, "graded Frobenius characteristic in the h basis",
            inp=None, flags="mn")
    p.add_argument("--via-kreweras", action="store_true")
    p = add("check-vanishing", cmd_check_vanishing, "check the vanishing bounds", inp=None,
            flags="n")
    p.add_argument("-p", "--partition", default=None)
    p = add("check-conjecture", cmd_check_conjecture,
            "compare the conjectured Kreweras formula with enumeration", inp=None)
    p.add_argument("--max-m", type=int, default=6)
    p.add_argument("--max-d", type=int, default=3)
    p.add_argument("--n-extra", type=int, default=2)
    p = add("verify-all", cmd_verify_all, "run the acceptance checks", inp=None)
    p.add_argument("--scale", choices=("small", "full"), default="small")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs < 1:
        parser.error("--jobs must be at least 1")
    try:
        return args.fn(args)
    except InvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (UsageError, PreconditionError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
