"""Tabulate the filtration and the primär subspace for each prime up to a bound.

Prints dim U_(p-1), dim P (from the definition), dim of the varpi-basis span,
and the counting formula side by side.
"""
import argparse

from kummerlab.classes import filtration_subspace, primar_indices, primar_kernel, primar_subspace
from kummerlab.config import PRIMES_TO_31
from kummerlab.cyclo import make_context


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k", type=int, default=4)
    ap.add_argument("--max-p", type=int, default=31)
    args = ap.parse_args()

    print(f"{'p':>3} {'U_(p-1)':>8} {'P':>4} {'basis':>6} {'P/U':>4} {'count':>6}  verdict")
    for p in PRIMES_TO_31:
        if p > args.max_p:
            break
        ctx = make_context(p, args.k)
        u = filtration_subspace(ctx, p - 1).dim
        kernel, basis = primar_kernel(ctx).dim, primar_subspace(ctx).dim
        count = len(primar_indices(p))
        verdict = "ok" if kernel - u == count else "formula undercounts"
        print(f"{p:>3} {u:>8} {kernel:>4} {basis:>6} {kernel - u:>4} {count:>6}  {verdict}")


if __name__ == "__main__":
    main()
