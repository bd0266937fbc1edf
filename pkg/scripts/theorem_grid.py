"""Verify the construction over a grid of (p, n) and print one row per point.

    python scripts/theorem_grid.py --primes 3 5 7 11 13 --kmax 4
"""

import argparse
import time

from gonalkit import verify_theorem


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--primes", type=int, nargs="+", default=[3, 5, 7, 11])
    parser.add_argument("--kmax", type=int, default=3)
    args = parser.parse_args()

    points = [(p, k * (p - 1)) for p in args.primes if p > 2 for k in range(args.kmax + 1)]
    if 2 in args.primes:
        points += [(2, n) for n in range(1, 2 * args.kmax + 2, 2)]

    print(f"{'p':>3} {'n':>4} {'d':>3} {'g':>6} {'#gonal':>6} {'conj':>5}  status  time")
    for p, n in points:
        start = time.perf_counter()
        r = verify_theorem(p, n)
        dt = time.perf_counter() - start
        print(
            f"{p:>3} {n:>4} {r.params.d:>3} {r.params.g:>6} {len(r.census.gonal_groups):>6} "
            f"{str(r.conjugate):>5}  {'PASS' if r.passed else 'FAIL':<6}  {dt:.2f}s"
        )


if __name__ == "__main__":
    main()
