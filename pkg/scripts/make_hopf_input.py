#!/usr/bin/env python3
"""Write the small quantum groups as Hopf structure-constant JSON files for
the `subdepth hopf` subcommand."""

import argparse
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from subdepth.hopfcore import build_small_quantum_group


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("n", type=int, help="2 or an odd n >= 3")
    ap.add_argument("out", help="output JSON path")
    ap.add_argument("--subalgebras", default="R1,R2,B",
                    help="comma-separated subset of R1,R2,B to embed")
    args = ap.parse_args()
    H, subs = build_small_quantum_group(args.n)
    wanted = {s.strip() for s in args.subalgebras.split(",") if s.strip()}
    picked = {k: v for k, v in subs.items() if k in wanted}
    data = H.to_json(subalgebras=picked)
    with open(args.out, "w") as fh:
        json.dump(data, fh, indent=1)
        fh.write("\n")
    print(f"wrote dim-{H.dim} Hopf algebra with subalgebras "
          f"{sorted(picked)} to {args.out}")


if __name__ == "__main__":
    main()
