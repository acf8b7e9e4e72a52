"""Brute-force model of (o/pi^m)^x for tiny p, used as an oracle.

Arithmetic here is a separate vectorised implementation (numpy int64
batches) and every predicate is tested straight from its definition: p-th
powers by exponentiation, "x = a mod p" by comparing against all rational
residues, classes modulo p-th powers by explicit cosets.  Nothing in this
module calls the digit/level machinery it is meant to check.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, log

import numpy as np

from .errors import TooLarge

DEFAULT_BUDGET = 2_000_000


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass
class BruteForceModel:
    """All of (o/pi^m)^x enumerated, with definition-level membership tests."""

    p: int
    m: int
    budget: int = DEFAULT_BUDGET
    include_nonunits: bool = False
    k: int = field(init=False)
    modulus: int = field(init=False)

    def __post_init__(self):
        p, m = self.p, self.m
        if p ** m > self.budget:
            raise TooLarge(f"|o/pi^{m}| = {p}^{m} exceeds budget {self.budget}")
        if m < 1:
            raise ValueError("m must be >= 1")
        self.n = p - 1
        self.k = _ceil_div(m, p - 1)
        self.modulus = p ** self.k
        n, M = self.n, self.modulus
        self._to_pi = np.array([[(-1) ** j * comb(i, j) % M for i in range(n)] for j in range(n)],
                               dtype=np.int64)
        self._from_pi = np.array([[(-1) ** i * comb(j, i) % M for j in range(n)] for i in range(n)],
                                 dtype=np.int64)
        self.elements = self._enumerate()

    # arithmetic on batches of zeta-basis coefficient rows

    def reduce(self, rows: np.ndarray) -> np.ndarray:
        return np.mod(rows, self.modulus)

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        p, n, M = self.p, self.n, self.modulus
        a, b = np.broadcast_arrays(np.atleast_2d(a), np.atleast_2d(b))
        acc = np.zeros((a.shape[0], p), dtype=np.int64)
        for i in range(n):
            for j in range(n):
                acc[:, (i + j) % p] = (acc[:, (i + j) % p] + a[:, i] * b[:, j]) % M
        return np.mod(acc[:, :n] - acc[:, n:n + 1], M)

    def power(self, a: np.ndarray, e: int) -> np.ndarray:
        a = np.atleast_2d(a)
        result = np.zeros_like(a)
        result[:, 0] = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    def conjugate(self, a: np.ndarray, j: int) -> np.ndarray:
        p, n, M = self.p, self.n, self.modulus
        a = np.atleast_2d(a)
        acc = np.zeros((a.shape[0], p), dtype=np.int64)
        for i in range(n):
            acc[:, i * j % p] += a[:, i]
        return np.mod(acc[:, :n] - acc[:, n:n + 1], M)

    def scalar(self, c: int) -> np.ndarray:
        row = np.zeros((1, self.n), dtype=np.int64)
        row[0, 0] = c % self.modulus
        return row

    # reduction modulo pi^r

    def keys(self, rows: np.ndarray, r: int | None = None) -> np.ndarray:
        """Integer key of each row modulo pi^r (r <= m)."""
        r = self.m if r is None else r
        p, M = self.p, self.modulus
        d = np.mod(np.atleast_2d(rows) @ self._to_pi.T, M)
        key = np.zeros(d.shape[0], dtype=np.int64)
        for j in range(self.n):
            s = max(0, _ceil_div(r - j, p - 1))
            key = key * p**s + np.mod(d[:, j], p**s)
        return key

    def _enumerate(self) -> np.ndarray:
        p, m, n = self.p, self.m, self.n
        ranges = [p ** max(0, _ceil_div(m - j, p - 1)) for j in range(n)]
        grids = np.meshgrid(*[np.arange(R, dtype=np.int64) for R in ranges], indexing="ij")
        d = np.stack([g.ravel() for g in grids], axis=1)
        if not self.include_nonunits:
            d = d[d[:, 0] % p != 0]
        return np.mod(d @ self._from_pi.T, self.modulus)

    @property
    def order(self) -> int:
        return self.elements.shape[0]

    # definition-level predicates, each returning a boolean mask over elements

    def pth_power_rows(self) -> np.ndarray:
        """Distinct p-th powers in the group."""
        powers = self.power(self.elements, self.p)
        _, idx = np.unique(self.keys(powers), return_index=True)
        return powers[np.sort(idx)]

    def in_filtration(self, level: int) -> np.ndarray:
        """x = 1 mod pi^level."""
        return self.keys(self.elements - self.scalar(1), level) == 0

    def is_pth_power_mod(self, r: int) -> np.ndarray:
        """x is a p-th power in (o/pi^r)^x."""
        if r > self.m:
            raise ValueError("r exceeds model precision")
        target = set(self.keys(self.power(self.elements, self.p), r).tolist())
        return np.isin(self.keys(self.elements, r), list(target))

    def _congruent_to_rational(self, rows: np.ndarray, r: int) -> np.ndarray:
        """rows = a mod pi^r for some a in Z_p^x (a ranges over unit residues mod p^k)."""
        M = self.modulus
        rationals = [a for a in range(1, M) if a % self.p]
        keys = self.keys(np.vstack([self.scalar(a) for a in rationals]), r)
        return np.isin(self.keys(rows, r), keys)

    def is_primaire(self) -> np.ndarray:
        return self._congruent_to_rational(self.elements, self.p - 1)

    def is_primar(self) -> np.ndarray:
        cond1 = self._congruent_to_rational(self.elements, 2)
        hn = self.mul(self.elements, self.conjugate(self.elements, -1))
        cond2 = self._congruent_to_rational(hn, self.p - 1)
        return cond1 & cond2

    def norms(self) -> np.ndarray:
        """N_{K|Q_p} of each element, as residues mod p^k."""
        out = self.elements
        for j in range(2, self.p):
            out = self.mul(out, self.conjugate(self.elements, j))
        if np.any(out[:, 1:]):
            raise AssertionError("norm is not rational")
        return out[:, 0]

    # classes modulo p-th powers

    def coset_ids(self) -> np.ndarray:
        """Canonical id of x * G^p: the least key over the coset."""
        best = None
        for h in self.pth_power_rows():
            k = self.keys(self.mul(self.elements, h[None, :]))
            best = k if best is None else np.minimum(best, k)
        return best

    def class_image_dim(self, mask: np.ndarray) -> int:
        """F_p-dimension of the image of a subgroup (given by mask) in G/G^p."""
        count = len(np.unique(self.coset_ids()[mask]))
        dim = round(log(count, self.p))
        if self.p ** dim != count:
            raise AssertionError(f"image of size {count} is not a power of {self.p}")
        return dim

    def class_membership(self, mask: np.ndarray) -> np.ndarray:
        """For every x: is the class of x in the image of the subgroup ``mask``?"""
        ids = self.coset_ids()
        return np.isin(ids, np.unique(ids[mask]))


def brute_force_model(p: int, m: int, budget: int = DEFAULT_BUDGET) -> BruteForceModel:
    return BruteForceModel(p, m, budget)


def residue_pth_powers_check(p: int) -> tuple[bool, bool, int]:
    """Exhaustive check on o/p: (p-th powers of units = F_p^x image,
    z^p = sum of coordinates for all z, number of distinct p-th powers)."""
    model = BruteForceModel(p, p - 1, include_nonunits=True)
    z = model.elements
    zp = model.power(z, p)
    digit_sum = np.mod(z.sum(axis=1), p)
    expected = np.zeros_like(zp)
    expected[:, 0] = digit_sum
    formula_ok = bool(np.all(np.mod(zp, p) == expected))
    units = z[np.mod(z.sum(axis=1), p) != 0]
    powers = {tuple(r) for r in np.mod(model.power(units, p), p).tolist()}
    prime_field = {tuple([a] + [0] * (p - 2)) for a in range(1, p)}
    return powers == prime_field, formula_ok, len(powers)
