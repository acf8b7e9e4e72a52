"""Arithmetic in the tame Eisenstein extension Z_p[x]/(x^e + p), gcd(e, p) = 1.

Used to test the norm criterion U_{re} cap N_{re+1} = U_{re+1} outside the
cyclotomic case.  The extension need not be Galois over Q_p, so norms are
determinants of multiplication matrices.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from . import arith
from .cyclo import PadicScalar, ValuationResult
from .errors import BadDegree, BadPrecision, ContextMismatch, NotAUnit, PrecisionTooLow, WildRamification


class TameContext:
    def __init__(self, p: int, e: int, k: int):
        if not arith.is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if e < 2:
            raise BadDegree(f"degree e = {e} must be >= 2")
        if gcd(e, p) != 1:
            raise WildRamification(f"p = {p} divides e = {e}")
        if k < 1:
            raise BadPrecision(f"k = {k} must be >= 1")
        self.p, self.e, self.k = p, e, k
        self.modulus = p**k
        self.N = k * e

    def __repr__(self):
        return f"TameContext(p={self.p}, e={self.e}, k={self.k})"

    def __eq__(self, other):
        return isinstance(other, TameContext) and (self.p, self.e, self.k) == (other.p, other.e, other.k)

    def __hash__(self):
        return hash((self.p, self.e, self.k))

    def __reduce__(self):
        return make_tame_context, (self.p, self.e, self.k)

    def elem(self, coeffs) -> "TameElem":
        coeffs = list(coeffs) + [0] * (self.e - len(coeffs))
        return TameElem(self, coeffs)

    def scalar(self, c: int) -> "TameElem":
        return self.elem([c])

    @property
    def one(self):
        return self.scalar(1)

    @property
    def uniformizer(self):
        return self.elem([0, 1])


@lru_cache(maxsize=None)
def make_tame_context(p: int, e: int, k: int) -> TameContext:
    return TameContext(p, e, k)


class TameElem:
    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: TameContext, coeffs):
        self.ctx = ctx
        self.coeffs = tuple(int(c) % ctx.modulus for c in coeffs)
        if len(self.coeffs) != ctx.e:
            raise ValueError(f"expected {ctx.e} coefficients")

    def _coerce(self, other):
        if isinstance(other, int):
            return self.ctx.scalar(other)
        if isinstance(other, TameElem):
            if other.ctx != self.ctx:
                raise ContextMismatch(f"{self.ctx} vs {other.ctx}")
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return TameElem(self.ctx, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return TameElem(self.ctx, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return TameElem(self.ctx, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        e, p = self.ctx.e, self.ctx.p
        prod = arith.convolve(self.coeffs, other.coeffs, self.ctx.modulus)
        out = list(prod[:e]) + [0] * (e - len(prod[:e]))
        for i, c in enumerate(prod[e:]):
            out[i] -= p * c  # x^e = -p
        return TameElem(self.ctx, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result, base = self.ctx.one, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ctx.scalar(other)
        if not isinstance(other, TameElem):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def __repr__(self):
        return f"TameElem({self.ctx!r}, {list(self.coeffs)})"

    def is_unit(self) -> bool:
        return self.coeffs[0] % self.ctx.p != 0


def tame_valuation(x: TameElem) -> ValuationResult:
    ctx = x.ctx
    best = ctx.N
    for i, c in enumerate(x.coeffs):
        if c:
            best = min(best, ctx.e * arith.vp(c, ctx.p, ctx.k) + i)
    if best >= ctx.N:
        return ValuationResult.at_least(ctx.N)
    return ValuationResult(best, True)


def tame_norm(x: TameElem) -> PadicScalar:
    """N_{L|Q_p}(x) as det of multiplication by x in the basis 1, x, ..., x^(e-1)."""
    ctx = x.ctx
    cols = [(x * ctx.elem([0] * i + [1])).coeffs for i in range(ctx.e)]
    mat = [[cols[i][r] for i in range(ctx.e)] for r in range(ctx.e)]
    return PadicScalar(arith.det_bareiss(mat), ctx.p, ctx.k)


def _norm_valuation_L(x: TameElem, target: int) -> ValuationResult:
    """pi_L-adic valuation of N(x) - target (e times the p-adic one)."""
    ctx = x.ctx
    v = PadicScalar(tame_norm(x).value - target, ctx.p, ctx.k).valuation()
    return ValuationResult(ctx.e * v.value, v.exact)


@dataclass(frozen=True)
class NormVerdict:
    hypothesis_met: bool
    conclusion_met: bool

    @property
    def holds(self) -> bool:
        return self.conclusion_met or not self.hypothesis_met


def check_norm_level_sample(x: TameElem, a: int, r: int) -> NormVerdict:
    """x = a mod p^r and N(x) = a^e mod p^r pi_L  ==>  x = a mod p^r pi_L."""
    ctx = x.ctx
    if not x.is_unit():
        raise NotAUnit(f"{x} is not a unit")
    if r < 1:
        raise ValueError("r must be >= 1")
    # N(x) - a^e is rational, so v_L >= re+1 needs v_p >= r+1
    if ctx.k < r + 1:
        raise PrecisionTooLow(f"need k >= {r + 1} for r = {r}")
    re = r * ctx.e
    vx = tame_valuation(x - a)
    vn = _norm_valuation_L(x, pow(a, ctx.e, ctx.modulus))
    hypothesis = vx.at_least_n(re) and vn.at_least_n(re + 1)
    return NormVerdict(hypothesis, vx.at_least_n(re + 1))


def check_norm_sample(x: TameElem, r: int) -> NormVerdict:
    return check_norm_level_sample(x, 1, r)


def sample_near(ctx: TameContext, a: int, r: int, rng: random.Random) -> TameElem:
    """Random a + p^r (b + pi_L * gamma); b is forced to 0 mod p half the time
    so that the norm hypothesis is met in a good share of samples."""
    M, p = ctx.modulus, ctx.p
    b = rng.randrange(M)
    if rng.random() < 0.5:
        b -= b % p
    gamma = [rng.randrange(M) for _ in range(ctx.e - 1)]
    pr = p**r
    return ctx.elem([a + pr * b] + [pr * g for g in gamma])


def tame_norm_sweep(p: int, e: int, r: int, samples: int, seed: int = 0, k: int | None = None,
               stream: int = 0) -> dict:
    """Sample units in U_{re} and count failures of the implication.

    ``stream`` selects an independent sample stream, for chunked runs.
    """
    ctx = make_tame_context(p, e, k if k is not None else r + 2)
    tag = f"tame-norm:{seed}:{p}:{e}:{r}"
    rng = random.Random(tag if stream == 0 else f"{tag}:{stream}")
    violations = met = 0
    for _ in range(samples):
        verdict = check_norm_sample(sample_near(ctx, 1, r, rng), r)
        met += verdict.hypothesis_met
        violations += not verdict.holds
    boundary = check_norm_sample(ctx.scalar(1 + p**r), r)
    return {
        "p": p, "e": e, "r": r, "samples": samples, "seed": seed,
        "hypothesis_met": met, "violations": violations,
        "boundary_hypothesis_met": boundary.hypothesis_met,
    }
