"""Integer helpers shared by the ring modules."""
from __future__ import annotations

from math import comb

import numpy as np

_INT64_SAFE = 2**62

# deterministic for n < 3.3e24
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact for all n < 3.3e24)."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def vp(n: int, p: int, cap: int) -> int:
    """p-adic valuation of n, capped at ``cap`` (returned when n == 0)."""
    if n == 0:
        return cap
    v = 0
    while n % p == 0 and v < cap:
        n //= p
        v += 1
    return v


def int64_safe(length: int, modulus: int) -> bool:
    """True when a length-``length`` dot product of residues fits in int64."""
    return length * (modulus - 1) ** 2 < _INT64_SAFE


def convolve(a, b, modulus: int) -> list[int]:
    """Full linear convolution of two residue sequences (unreduced)."""
    if int64_safe(min(len(a), len(b)), modulus):
        return np.convolve(np.asarray(a, dtype=np.int64),
                           np.asarray(b, dtype=np.int64)).tolist()
    return np.convolve(np.asarray(a, dtype=object),
                       np.asarray(b, dtype=object)).tolist()


def matvec_mod(mat, vec, modulus: int) -> list[int]:
    """``mat @ vec mod modulus`` for residue matrices."""
    if int64_safe(len(vec), modulus):
        out = np.asarray(mat, dtype=np.int64) @ np.asarray(vec, dtype=np.int64)
        return (out % modulus).tolist()
    return [sum(m * v for m, v in zip(row, vec)) % modulus for row in mat]


def det_bareiss(mat) -> int:
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    a = [list(map(int, row)) for row in mat]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def binomial_row(n: int) -> list[int]:
    return [comb(n, i) for i in range(n + 1)]
