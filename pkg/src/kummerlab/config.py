"""Experiment grids for the self-test driver."""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

from .arith import is_prime

PRIMES_TO_31 = tuple(q for q in range(3, 32) if is_prime(q))

# irregular pairs (p, 2k) with p | numerator(B_2k), from exact Bernoulli numbers
KNOWN_IRREGULAR = {37: [32], 59: [44], 67: [58], 101: [68], 103: [24]}


@dataclass(frozen=True)
class GridConfig:
    name: str = "full"
    seed: int = 0
    k: int = 4
    brute_primes: tuple[int, ...] = (3, 5)
    filtration_primes: tuple[int, ...] = tuple(q for q in PRIMES_TO_31 if q >= 7)
    counterexample_primes: tuple[int, ...] = (5, 7, 11, 13)
    chain_primes: tuple[int, ...] = tuple(q for q in PRIMES_TO_31 if q >= 5)
    norm_criterion_sample_primes: tuple[int, ...] = (7, 11)
    norm_criterion_samples: int = 10_000
    residue_power_primes: tuple[int, ...] = (3, 5, 7)
    tame_primes: tuple[int, ...] = (2, 3, 5, 7)
    tame_degrees: tuple[int, ...] = (2, 3, 4, 6)
    tame_levels: tuple[int, ...] = (1, 2)
    tame_samples: int = 1000
    global_primes: tuple[int, ...] = (5, 7, 11, 13, 17, 19, 23, 29, 31)
    global_samples: int = 1000
    counting_primes: tuple[int, ...] = PRIMES_TO_31
    numeric_primes: tuple[int, ...] = (3, 5, 7, 11, 13)
    numeric_samples: int = 1000
    regular_primes: tuple[int, ...] = PRIMES_TO_31
    irregular: dict = field(default_factory=lambda: dict(KNOWN_IRREGULAR))
    # seconds per criterion, keyed by criterion number
    time_limits: dict = field(default_factory=lambda: {
        1: 10, 2: 1, 3: 30, 4: 60, 5: 30, 6: 60, 7: 120, 8: 10, 9: 60, 10: 30})


FULL = GridConfig()

SMALL = replace(
    FULL,
    name="small",
    filtration_primes=(7, 11, 13),
    chain_primes=(5, 7, 11, 13),
    norm_criterion_samples=500,
    tame_samples=100,
    global_primes=(5, 7, 11, 13),
    global_samples=100,
    numeric_samples=100,
)

GRIDS = {"full": FULL, "small": SMALL}


def worker_count() -> int:
    """KUMMERLAB_THREADS caps parallelism; 0 or unset means one per CPU."""
    raw = os.environ.get("KUMMERLAB_THREADS", "0")
    try:
        n = int(raw)
    except ValueError:
        n = 0
    return n if n > 0 else (os.cpu_count() or 1)


def parallel_map(fn, items):
    """Order-preserving map, fanned out over processes when allowed."""
    items = list(items)
    workers = min(worker_count(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
