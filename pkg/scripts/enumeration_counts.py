"""Count generating vectors of D_p x D_p for the family signatures (0; 2,2,2,p^d).

Prints counts, conjugation classes and timing for every (p, d) whose search
space fits the budget; larger cases are reported as refused.
"""

import argparse

from gonalkit import build_dihedral_product, enumerate_generating_vectors
from gonalkit.errors import BudgetExceeded, NonHyperbolicError
from gonalkit.search import SearchBudget
from gonalkit.signature_rh import family_signature


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--primes", type=int, nargs="+", default=[2, 3, 5])
    parser.add_argument("--dmax", type=int, default=3)
    parser.add_argument("--max-space", type=int, default=3 * 10**5)
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--classes", action="store_true")
    args = parser.parse_args()

    budget = SearchBudget(max_space=args.max_space)
    for p in args.primes:
        G = build_dihedral_product(p)
        for d in range(1, args.dmax + 1):
            sig = family_signature(p, d)
            try:
                res = enumerate_generating_vectors(
                    G, sig, budget, workers=args.workers, collect=args.classes
                )
            except NonHyperbolicError:
                print(f"p={p} d={d} {sig}: not hyperbolic")
                continue
            except BudgetExceeded as exc:
                print(f"p={p} d={d} {sig}: refused (space {exc.space_size})")
                continue
            extra = f", {res.classes_up_to_conjugation} classes" if args.classes else ""
            print(
                f"p={p} d={d} {sig}: {res.total_count} vectors{extra} "
                f"(space {res.search_space_size}, {res.elapsed:.2f}s)"
            )


if __name__ == "__main__":
    main()
