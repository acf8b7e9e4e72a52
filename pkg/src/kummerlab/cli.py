"""Command-line interface.

Exit codes: 0 success, 1 property violation, 2 parse/usage error,
3 precision error.  JSON goes to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import sys

from . import errors
from .classes import (
    filtration_subspace,
    primar_indices,
    primar_kernel,
    primar_subspace,
)
from .classify import classify
from .config import GRIDS, parallel_map
from .cyclo import DEFAULT_K, make_context
from .globalunits import check_global_intersections, is_regular
from .parser import parse_element
from .report import classification_document, dumps
from .selftest import run_all
from .tame import tame_norm_sweep

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_PRECISION = 0, 1, 2, 3

SAMPLE_CHUNK = 250


def _emit(doc: dict):
    sys.stdout.write(dumps(doc) + "\n")


def cmd_classify(args) -> int:
    ctx = make_context(args.p, args.k)
    x = parse_element(args.element, ctx)
    _emit(classification_document(args.element, x, certificate=args.certificate))
    return EXIT_OK


def cmd_chain(args) -> int:
    p = args.p
    ctx = make_context(p, args.k)
    dims = [filtration_subspace(ctx, n).dim for n in range(1, p + 2)]
    U_p, U_pm1 = filtration_subspace(ctx, p), filtration_subspace(ctx, p - 1)
    P = primar_kernel(ctx)
    P_basis = primar_subspace(ctx)
    verdicts = {
        "zero_strictly_in_U_p": U_p.dim > 0,
        "U_p_strictly_in_U_p_minus_1": U_p <= U_pm1 and U_p.dim < U_pm1.dim,
        "U_p_minus_1_in_P": U_pm1 <= P,
        "U_p_minus_1_equals_P": U_pm1 == P,
        "equality_exactly_when_p_is_3": (U_pm1 == P) == (p == 3),
        "dims_match_p_plus_1_minus_n": dims == [p + 1 - n for n in range(1, p + 2)],
    }
    count = len(primar_indices(p))
    doc = {
        "p": p,
        "precision": {"k": ctx.k, "N": ctx.N},
        "dim_U": {str(n): d for n, d in enumerate(dims, start=1)},
        "dim_P": P.dim,
        "dim_P_from_varpi_basis": P_basis.dim,
        "varpi_basis_indices": primar_indices(p),
        "counting_formula": {
            "count": count,
            "dim_P_over_U_p_minus_1": P.dim - 2,
            "holds": P.dim - 2 == count,
        },
        "verdicts": verdicts,
        "ok": all(v for key, v in verdicts.items() if key != "U_p_minus_1_equals_P"),
    }
    _emit(doc)
    return EXIT_OK if doc["ok"] else EXIT_VIOLATION


def cmd_counterexamples(args) -> int:
    p = args.p
    ctx = make_context(p, args.k)
    cases = []
    r = classify(ctx.scalar(1 + p))
    cases.append({
        "element": "1+p",
        "expected": {"is_primaire": True, "is_p_primary": False},
        "actual": r.to_dict(),
        "match": r.is_primaire and not r.is_p_primary,
    })
    r = classify(ctx.one + ctx.varpi_power(p - 2))
    expected = {"is_primar": True, "is_primaire": False} if p > 3 else {"is_primar": False}
    cases.append({
        "element": f"1+varpi^{p - 2}",
        "expected": expected,
        "actual": r.to_dict(),
        "match": all(getattr(r, key) == val for key, val in expected.items()),
    })
    ok = all(c["match"] for c in cases)
    _emit({"p": p, "precision": {"k": ctx.k, "N": ctx.N}, "cases": cases, "ok": ok})
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_global(args) -> int:
    ctx = make_context(args.p, args.k)
    report = check_global_intersections(ctx, samples=args.samples, seed=args.seed)
    _emit(report.to_dict())
    return EXIT_OK if report.ok else EXIT_VIOLATION


def _tame_chunk(job):
    p, e, r, n, seed, stream = job
    return tame_norm_sweep(p, e, r, n, seed=seed, stream=stream)


def cmd_tame_norm(args) -> int:
    jobs, left, stream = [], args.samples, 0
    while left > 0:
        n = min(SAMPLE_CHUNK, left)
        jobs.append((args.p, args.e, args.r, n, args.seed, stream))
        left -= n
        stream += 1
    if not jobs:
        jobs.append((args.p, args.e, args.r, 0, args.seed, 0))
    parts = parallel_map(_tame_chunk, jobs)
    doc = {
        "p": args.p, "e": args.e, "r": args.r,
        "samples": args.samples, "seed": args.seed,
        "hypothesis_met": sum(x["hypothesis_met"] for x in parts),
        "violations": sum(x["violations"] for x in parts),
        "boundary_witness": f"1+{args.p}^{args.r}",
        "boundary_hypothesis_met": parts[0]["boundary_hypothesis_met"],
    }
    doc["ok"] = doc["violations"] == 0 and not doc["boundary_hypothesis_met"]
    _emit(doc)
    return EXIT_OK if doc["ok"] else EXIT_VIOLATION


def cmd_regular(args) -> int:
    regular, indices = is_regular(args.p)
    _emit({"p": args.p, "regular": regular, "irregular_indices": indices})
    return EXIT_OK


def cmd_selftest(args) -> int:
    results = run_all(GRIDS[args.grid])
    for r in results:
        print(r.line(), file=sys.stderr)
        for d in r.details:
            print("    " + d, file=sys.stderr)
    _emit({
        "grid": args.grid,
        "criteria": [
            {"number": r.number, "name": r.name, "passed": r.passed, "details": r.details}
            for r in results
        ],
        "ok": all(r.passed for r in results),
    })
    return EXIT_OK if all(r.passed for r in results) else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kummerlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def with_p(sp, k=True):
        sp.add_argument("--p", type=int, required=True, help="odd prime")
        if k:
            sp.add_argument("--k", type=int, default=DEFAULT_K, help="p-adic coefficient precision")
        return sp

    sp = with_p(sub.add_parser("classify", help="classify one unit"))
    sp.add_argument("--element", required=True, help='expression, e.g. "1+varpi^5"')
    sp.add_argument("--certificate", action="store_true", help="attach a p-th root certificate")
    sp.set_defaults(func=cmd_classify)

    with_p(sub.add_parser("chain", help="filtration dims and the primär subspace")).set_defaults(func=cmd_chain)
    with_p(sub.add_parser("counterexamples", help="classify 1+p and 1+varpi^(p-2)")).set_defaults(
        func=cmd_counterexamples)

    sp = with_p(sub.add_parser("global", help="global unit image and certificates"))
    sp.add_argument("--samples", type=int, default=200)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_global)

    sp = sub.add_parser("cor5", help="sample the tame norm criterion")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--e", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--samples", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_tame_norm)

    with_p(sub.add_parser("regular", help="Kummer regularity check"), k=False).set_defaults(func=cmd_regular)

    sp = sub.add_parser("selftest", help="run the acceptance suites")
    sp.add_argument("--grid", choices=sorted(GRIDS), default="small")
    sp.set_defaults(func=cmd_selftest)
    return parser


def run_command(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (errors.PrecisionTooLow, errors.BadPrecision) as exc:
        print(f"precision error: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except (errors.GeneratorNotPrimar, errors.IntersectionNonTrivial, errors.CertificateImpossible) as exc:
        print(f"property violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except errors.KummerLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main(argv=None) -> int:
    return run_command(argv)


if __name__ == "__main__":
    sys.exit(main())
