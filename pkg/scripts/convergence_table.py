#!/usr/bin/env python3
"""Norm/spectrum convergence study for both rules, printed and optionally saved as CSV."""

import argparse
from pathlib import Path

from oba_lab import QuadratureRule, convergence_study

CSV_HEADER = "n,h,norm_T,cluster_radius,deviation,norm_excess"


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--ns", type=str, default="16,32,64,128,256,512,1024")
    parser.add_argument("--out-dir", type=Path, default=None,
                        help="write convergence_<rule>.csv files here")
    args = parser.parse_args()
    ns = [int(part) for part in args.ns.split(",") if part.strip()]

    for rule in QuadratureRule:
        rows = convergence_study(ns, rule)
        print(f"\n== rule: {rule.value} ==")
        print(CSV_HEADER)
        lines = [
            f"{r.n},{r.h!r},{r.norm_T!r},{r.cluster_radius!r},{r.deviation!r},{r.norm_excess!r}"
            for r in rows
        ]
        print("\n".join(lines))
        if args.out_dir is not None:
            args.out_dir.mkdir(parents=True, exist_ok=True)
            path = args.out_dir / f"convergence_{rule.value}.csv"
            path.write_text(CSV_HEADER + "\n" + "\n".join(lines) + "\n", encoding="utf-8")
            print(f"wrote {path}")


if __name__ == "__main__":
    main()
