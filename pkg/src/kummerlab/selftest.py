"""Acceptance suites, runnable from the CLI (``kummerlab selftest``) and pytest.

Each criterion returns a :class:`CriterionResult`; a criterion passes only
if every check holds and it finishes inside its time limit.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable

import numpy as np

from .brute import BruteForceModel, residue_pth_powers_check
from .classes import (
    UnitClassVector,
    digit_coordinates,
    filtration_subspace,
    primar_indices,
    primar_kernel,
    primar_subspace,
)
from .classify import classify, is_primaire, is_primar
from .config import FULL, GridConfig, parallel_map
from .cyclo import (
    CycloElem,
    absolute_norm,
    absolute_norm_det,
    make_context,
    pth_root,
)
from .globalunits import check_global_intersections, is_regular
from .tame import tame_norm_sweep


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    seconds: float = 0.0
    limit: float = 0.0
    details: list[str] = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] criterion {self.number:2d}: {self.name} ({self.seconds:.2f}s / {self.limit:.0f}s)"


class _Checker:
    def __init__(self):
        self.ok = True
        self.details: list[str] = []

    def check(self, cond: bool, msg: str):
        if not cond:
            self.ok = False
            self.details.append("violated: " + msg)


def _random_elem(ctx, rng: random.Random, unit: bool = False) -> CycloElem:
    while True:
        x = ctx.elem([rng.randrange(ctx.modulus) for _ in range(ctx.n)])
        if not unit or x.is_unit():
            return x


def _lift(ctx, row) -> CycloElem:
    return ctx.elem([int(c) for c in row])


# 1


def filtration_dimensions(grid: GridConfig, c: _Checker):
    for p in grid.brute_primes:
        ctx = make_context(p, max(2, grid.k))
        model = BruteForceModel(p, p + 1)
        for n in range(1, p + 2):
            brute = model.class_image_dim(model.in_filtration(n))
            fast = filtration_subspace(ctx, n).dim
            c.check(brute == fast == p + 1 - n,
                    f"p={p} n={n}: brute {brute}, frame {fast}, formula {p + 1 - n}")
    for p in grid.filtration_primes:
        ctx = make_context(p, grid.k)
        for a in range(1, p + 1):
            c.check(digit_coordinates(ctx.eta(a)) == UnitClassVector.unit(p, a),
                    f"p={p}: eta_{a} is not the unit vector e_{a}")
        for n in range(1, p + 2):
            dim = filtration_subspace(ctx, n).dim
            c.check(dim == p + 1 - n, f"p={p} n={n}: dim {dim} != {p + 1 - n}")


# 2


def counterexamples(grid: GridConfig, c: _Checker):
    for p in grid.counterexample_primes:
        ctx = make_context(p, grid.k)
        r = classify(ctx.scalar(1 + p))
        c.check(r.is_primaire and not r.is_p_primary, f"p={p}: 1+p gives {r}")
        r = classify(ctx.one + ctx.varpi_power(p - 2))
        c.check(r.is_primar and not r.is_primaire, f"p={p}: 1+varpi^(p-2) gives {r}")
    ctx = make_context(3, grid.k)
    r = classify(ctx.one + ctx.varpi)
    c.check(not r.is_primar, f"p=3: 1+varpi should not be primär, got {r}")


# 3


def chain_strictness(grid: GridConfig, c: _Checker):
    for p in grid.chain_primes:
        ctx = make_context(p, grid.k)
        witnesses = {
            "p-th power": (ctx.one + ctx.pi**2) ** p,
            "p-primary, not p-th power": ctx.eta(p),
            "primaire, not p-primary": ctx.scalar(1 + p),
            "primär, not primaire": ctx.eta(p - 2),
            "not primär": ctx.zeta,
        }
        expected = {
            "p-th power": (True, True, True, True),
            "p-primary, not p-th power": (False, True, True, True),
            "primaire, not p-primary": (False, False, True, True),
            "primär, not primaire": (False, False, False, True),
            "not primär": (False, False, False, False),
        }
        for label, x in witnesses.items():
            r = classify(x)
            got = (r.is_pth_power, r.is_p_primary, r.is_primaire, r.is_primar)
            c.check(got == expected[label], f"p={p} {label}: got {got}")
    # p = 3: primär <=> primaire on the whole group, by definition and by fast path
    ctx = make_context(3, max(2, grid.k))
    model = BruteForceModel(3, 4)
    brute_primar, brute_primaire = model.is_primar(), model.is_primaire()
    c.check(bool(np.all(brute_primar == brute_primaire)), "p=3: brute primär != primaire")
    for row, bp in zip(model.elements, brute_primar):
        x = _lift(ctx, row)
        c.check(is_primar(x)[0] == is_primaire(x)[0] == bool(bp), f"p=3: fast path disagrees on {x}")


# 4


def _norm_criterion_exhaustive(p: int, k: int, c: _Checker) -> int:
    model = BruteForceModel(p, p + 1)
    ctx = make_context(p, max(2, model.k))
    norms = model.norms()
    norm_ok = np.mod(norms - 1, p * p) == 0  # = 1 mod p*pi, since v_pi(p^2) = 2p-2 >= p
    hyp = model.is_primaire() & norm_ok
    concl = model.is_pth_power_mod(p)
    c.check(bool(np.all(~hyp | concl)), f"p={p}: brute-force violation of primaire + trivial norm => p-primary")
    for row, h in zip(model.elements, hyp):
        if h:
            x = _lift(ctx, row)
            c.check(classify(x).is_p_primary, f"p={p}: fast path says {x} not p-primary")
    return int(hyp.sum())


def _norm_criterion_sample(p: int, k: int, samples: int, seed: int) -> tuple[int, int]:
    """Draw units a*(1 + p*gamma) with the trace of gamma pushed to 0 mod p in
    most draws, keep those meeting the hypothesis, count violations."""
    ctx = make_context(p, k)
    rng = random.Random(f"primaire-norm:{seed}:{p}")
    kept = violations = 0
    while kept < samples:
        g = [rng.randrange(ctx.modulus) for _ in range(ctx.n)]
        if rng.random() < 0.9:
            g[0] += -sum(g) % p  # Tr(gamma) = -(sum g_i) mod p
        x = ctx.teichmuller(rng.randrange(1, p)) * (ctx.one + ctx.elem(g) * p)
        if not is_primaire(x)[0]:
            continue
        if (absolute_norm(x).value - 1) % (p * p):
            continue
        kept += 1
        violations += not classify(x).is_p_primary
    return kept, violations


def norm_criterion(grid: GridConfig, c: _Checker):
    for p in grid.brute_primes:
        hits = _norm_criterion_exhaustive(p, grid.k, c)
        c.check(hits > 0, f"p={p}: no element is primaire with trivial norm")
    for p in grid.norm_criterion_sample_primes:
        kept, bad = _norm_criterion_sample(p, grid.k, grid.norm_criterion_samples, grid.seed)
        c.check(bad == 0, f"p={p}: {bad} violations in {kept} filtered samples")


# 5


def residue_pth_powers(grid: GridConfig, c: _Checker):
    for p in grid.residue_power_primes:
        same_set, formula, count = residue_pth_powers_check(p)
        c.check(same_set and count == p - 1, f"p={p}: p-th power set has {count} elements")
        c.check(formula, f"p={p}: z^p != sum of coordinates")


# 6


def _tame_cell(args):
    p, e, r, samples, seed = args
    return tame_norm_sweep(p, e, r, samples, seed)


def tame_norms(grid: GridConfig, c: _Checker):
    cells = [(p, e, r, grid.tame_samples, grid.seed)
             for p in grid.tame_primes for e in grid.tame_degrees if e % p
             for r in grid.tame_levels]
    for res in parallel_map(_tame_cell, cells):
        cell = f"p={res['p']} e={res['e']} r={res['r']}"
        c.check(res["violations"] == 0, f"{cell}: {res['violations']} violations")
        c.check(res["hypothesis_met"] > 0, f"{cell}: hypothesis never met")
        c.check(not res["boundary_hypothesis_met"], f"{cell}: 1+p^r met the norm hypothesis")


# 7


def _global_cell(args):
    p, k, samples, seed = args
    return check_global_intersections(make_context(p, k), samples=samples, seed=seed).to_dict()


def global_units(grid: GridConfig, c: _Checker):
    cells = [(p, grid.k, grid.global_samples, grid.seed) for p in grid.global_primes]
    for rep in parallel_map(_global_cell, cells):
        p = rep["p"]
        c.check(rep["generator_norms_one"], f"p={p}: a generator has norm != 1")
        c.check(rep["dim_E_cap_P"] == 0, f"p={p}: dim(E cap P) = {rep['dim_E_cap_P']}")
        c.check(rep["dim_E_cap_U_pm1"] == 0, f"p={p}: dim(E cap U_(p-1)) = {rep['dim_E_cap_U_pm1']}")
        c.check(rep["sampled_primar"] > 0, f"p={p}: no primär samples drawn")
        c.check(all(cert["certified"] for cert in rep["certificates"]), f"p={p}: uncertified sample")


# 8


def counting(grid: GridConfig, c: _Checker):
    spot = {3: 0, 5: 1, 7: 2, 31: 8}
    for p, want in spot.items():
        c.check(len(primar_indices(p)) == want, f"|I| at p={p} is {len(primar_indices(p))}, expected {want}")
    for p in grid.counting_primes:
        ctx = make_context(p, grid.k)
        true_P = primar_kernel(ctx)
        basis_P = primar_subspace(ctx)
        count = len(primar_indices(p))
        c.check(basis_P <= true_P, f"p={p}: a 1+varpi^a generator lies outside the primär image")
        c.check(true_P.dim - 2 == count,
                f"p={p}: dim P/U_(p-1) = {true_P.dim - 2} (image of all primär units), "
                f"count of odd a in [3,p-2] with 2a >= p-1 is {count}")


# 9


def numerics(grid: GridConfig, c: _Checker):
    for p in grid.numeric_primes:
        ctx = make_context(p, grid.k)
        rng = random.Random(f"numerics:{grid.seed}:{p}")
        prec = ctx.N - (p - 1)
        for _ in range(grid.numeric_samples):
            x = _random_elem(ctx, rng)
            c.check(absolute_norm(x) == absolute_norm_det(x), f"p={p}: norm paths differ on {x}")
            y = _random_elem(ctx, rng, unit=True)
            target = y**p
            root = pth_root(target)
            c.check((root**p - target).valuation().at_least_n(prec), f"p={p}: root of {target} fails")


# 10


def _bernoulli_by_recurrence(n: int) -> list[Fraction]:
    """sum_{j<=m} C(m+1, j) B_j = 0: a second, independent route."""
    B = [Fraction(1)]
    for m in range(1, n + 1):
        B.append(-sum(comb(m + 1, j) * B[j] for j in range(m)) / (m + 1))
    return B


def regularity(grid: GridConfig, c: _Checker):
    for p in grid.regular_primes:
        reg, bad = is_regular(p)
        c.check(reg and bad == [], f"p={p} reported irregular {bad}")
    oracle = _bernoulli_by_recurrence(max(grid.irregular) - 3)
    for p, indices in grid.irregular.items():
        reg, bad = is_regular(p)
        ref = [k for k in range(2, p - 2, 2) if oracle[k].numerator % p == 0]
        c.check(not reg and bad == indices == ref, f"p={p}: got {bad}, table {indices}, oracle {ref}")


CRITERIA: list[tuple[int, str, Callable[[GridConfig, _Checker], None]]] = [
    (1, "filtration dimensions", filtration_dimensions),
    (2, "counterexamples 1+p and 1+varpi^(p-2)", counterexamples),
    (3, "chain strictness", chain_strictness),
    (4, "primaire with trivial norm is p-primary", norm_criterion),
    (5, "p-th powers mod p are the prime field", residue_pth_powers),
    (6, "norm levels on tame Eisenstein extensions", tame_norms),
    (7, "global units meet P and U_(p-1) trivially", global_units),
    (8, "counting formula dim P/U_(p-1)", counting),
    (9, "norm dual path and p-th root roundtrip", numerics),
    (10, "regularity via Bernoulli numerators", regularity),
]


def run_criterion(number: int, grid: GridConfig = FULL) -> CriterionResult:
    _, name, fn = next(cr for cr in CRITERIA if cr[0] == number)
    checker = _Checker()
    start = time.perf_counter()
    try:
        fn(grid, checker)
    except Exception as exc:  # a crash is a failed criterion, reported as such
        checker.check(False, f"raised {type(exc).__name__}: {exc}")
    elapsed = time.perf_counter() - start
    limit = grid.time_limits[number]
    checker.check(elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s")
    return CriterionResult(number, name, checker.ok, elapsed, limit, checker.details)


def run_all(grid: GridConfig = FULL) -> list[CriterionResult]:
    return [run_criterion(n, grid) for n, _, _ in CRITERIA]
