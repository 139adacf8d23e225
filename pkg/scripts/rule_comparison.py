#!/usr/bin/env python3
"""Side-by-side comparison of the two quadrature rules.

The left-endpoint grid keeps the spectrum of T_n exactly at {1} but lets the
norm exceed 1; the trapezoid grid pins the norm at 1 (accretivity) but smears
the spectrum to 1/(1 + h/2).  No finite grid gets both, which is why the
witness facts are split across the rules.
"""

import argparse

from oba_lab import QuadratureRule, build_witness


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--ns", type=str, default="2,8,32,128,512")
    args = parser.parse_args()
    ns = [int(part) for part in args.ns.split(",") if part.strip()]

    header = (
        f"{'n':>5}  {'rule':>10}  {'norm_T':>18}  {'norm_excess':>12}  "
        f"{'cluster_radius':>14}  {'cone_member':>11}  {'geq_unit':>8}"
    )
    print(header)
    print("-" * len(header))
    for n in ns:
        for rule in (QuadratureRule.LEFT_ENDPOINT, QuadratureRule.TRAPEZOID):
            w = build_witness(n, rule)
            print(
                f"{n:>5}  {rule.value:>10}  {w.norm_T:>18.12f}  {w.norm_excess:>12.3e}  "
                f"{w.cluster_radius:>14.6e}  {str(w.cone_member):>11}  {str(w.geq_unit):>8}"
            )


if __name__ == "__main__":
    main()
