"""List irregular primes and their indices up to the configured bound."""
import argparse

from kummerlab.arith import is_prime
from kummerlab.globalunits import REGULARITY_BOUND, is_regular


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-p", type=int, default=REGULARITY_BOUND)
    args = ap.parse_args()
    for p in range(3, min(args.max_p, REGULARITY_BOUND) + 1):
        if is_prime(p):
            regular, idx = is_regular(p)
            if not regular:
                print(p, idx)


if __name__ == "__main__":
    main()
