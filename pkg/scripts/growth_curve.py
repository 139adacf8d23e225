#!/usr/bin/env python3
"""Print the normalized power-growth sequence a_k = k ||(T - I)^k||^(1/k).

For operators satisfying lim k*||(T - I)^k||^(1/k) = 0 the order relation
T >= I would follow; this sequence shows the discretized resolvent family is
nowhere near that regime (a_k plateaus above 2 instead of vanishing).
"""

import argparse

from oba_lab import growth_diagnostic


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=256)
    parser.add_argument("--k-max", type=int, default=64, dest="k_max")
    args = parser.parse_args()

    values = growth_diagnostic(args.n, args.k_max)
    print(f"{'k':>4}  {'a_k':>12}")
    for k, a in enumerate(values, start=1):
        print(f"{k:>4}  {a:>12.6f}")
    print(f"\nmax a_k = {values.max():.6f} at k = {int(values.argmax()) + 1}")
    print(f"a_{args.k_max} = {values[-1]:.6f}")


if __name__ == "__main__":
    main()
