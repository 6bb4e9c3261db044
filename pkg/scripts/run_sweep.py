#!/usr/bin/env python3
"""Corpus sweep over the built-in catalog with the eigenvalue oracle and the
d_0 <= d_h conjecture check; equivalent to `subdepth sweep --conjecture`."""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from subdepth.corpus import run_sweep


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-order", type=int, default=24)
    args = ap.parse_args()
    t0 = time.monotonic()
    report = run_sweep(args.max_order)
    dt = time.monotonic() - t0
    by_group: dict[str, int] = {}
    for row in report.rows:
        by_group[row.group] = by_group.get(row.group, 0) + 1
    print(f"{len(report.rows)} pairs across {len(by_group)} groups in {dt:.1f}s")
    widest = max(len(r.group) for r in report.rows)
    for row in report.rows:
        print(f"  {row.group.ljust(widest)} |H|={row.subgroup_order:<3} "
              f"index={row.index:<3} d_0={row.d_0} d_ev={row.d_ev} "
              f"d_odd={row.d_odd} d_h={row.d_h}")
    print(f"eigenvalue oracle violations: "
          f"{sum(1 for r in report.rows if not r.eigen_ok)}")
    print(f"Perron-Frobenius violations: "
          f"{sum(1 for r in report.rows if not r.pf_ok)}")
    print(f"d_0 <= d_h violations: "
          f"{sum(1 for r in report.rows if not r.conjecture_ok)}")
    return 1 if report.violations else 0


if __name__ == "__main__":
    sys.exit(main())
