"""Print |DPF_{m,n,d}| and its nondecreasing part for a grid of (m, n), one row per d.

Each value is checked against exhaustive simulation when --verify is given.
"""

import argparse
from dataclasses import dataclass

from dpf.enumeration import count_dpf_orbit_sum, count_nondecreasing


@dataclass
class TableConfig:
    max_m: int = 5
    max_n: int = 5
    verify: bool = False


def table(cfg: TableConfig) -> list[str]:
    rows = ["m n d nondecreasing all"]
    for m in range(1, cfg.max_m + 1):
        for n in range(1, cfg.max_n + 1):
            for d in range(max(m - n, 0), m + 1):
                nd = count_nondecreasing(m, n, d, cfg.verify)
                full = count_dpf_orbit_sum(m, n, d, cfg.verify)
                if not (nd.consistent and full.consistent):
                    raise SystemExit(f"mismatch at m={m} n={n} d={d}")
                rows.append(f"{m} {n} {d} {nd.formula_value} {full.formula_value}")
    return rows


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-m", type=int, default=5)
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--verify", action="store_true")
    cfg = TableConfig(**vars(ap.parse_args(argv)))
    print("\n".join(table(cfg)))


if __name__ == "__main__":
    main()
