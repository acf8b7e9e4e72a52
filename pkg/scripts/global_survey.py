"""Survey the global cyclotomic units across primes.

For each p: dim E, dim of its meets with P and U_(p-1), how many sampled
unit products were primär, and whether each got a verified root.
Writes one JSON object per line.
"""
import argparse
import json
import sys

from kummerlab.config import parallel_map
from kummerlab.cyclo import make_context
from kummerlab.globalunits import check_global_intersections


def survey(job):
    p, k, samples, seed = job
    report = check_global_intersections(make_context(p, k), samples=samples, seed=seed,
                                        max_certificates=samples)
    certs = report.certificates
    return {
        "p": p, "dim_E": report.dim_E, "dim_P": report.dim_P,
        "dim_E_cap_P": report.dim_E_cap_P, "dim_E_cap_U_pm1": report.dim_E_cap_U_pm1,
        "samples": samples, "primar": report.sampled_primar,
        "certified": sum(c["certified"] for c in certs),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--primes", type=int, nargs="+", default=[5, 7, 11, 13, 17, 19, 23, 29, 31])
    ap.add_argument("--k", type=int, default=4)
    ap.add_argument("--samples", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rows = parallel_map(survey, [(p, args.k, args.samples, args.seed) for p in args.primes])
    for row in rows:
        sys.stdout.write(json.dumps(row, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
