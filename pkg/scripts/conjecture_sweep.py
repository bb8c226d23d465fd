"""Compare the conjectured defective Kreweras formula with enumeration on a wide range.

    python3 scripts/conjecture_sweep.py --max-m 8 --max-d 4 --n-extra 3 --jobs 4 > sweep.json
"""

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass

from dpf.kreweras import check_conjecture


@dataclass
class SweepConfig:
    max_m: int = 8
    max_d: int = 4
    n_extra: int = 3
    jobs: int = 1


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in asdict(SweepConfig()).items():
        ap.add_argument("--" + name.replace("_", "-"), type=int, default=default)
    cfg = SweepConfig(**vars(ap.parse_args(argv)))

    start = time.perf_counter()
    report = check_conjecture(cfg.max_m, cfg.max_d, cfg.n_extra, cfg.jobs)
    out = {"config": asdict(cfg), "seconds": round(time.perf_counter() - start, 2), **report.to_json()}
    json.dump(out, sys.stdout, indent=2)
    print()
    print(f"{report.cases_checked} cases, {len(report.mismatches)} mismatches", file=sys.stderr)
    return 0 if report.passed else 3


if __name__ == "__main__":
    sys.exit(main())
