"""Truncated arithmetic in the local cyclotomic ring o = Z_p[zeta].

Elements are stored as coefficient tuples in the basis 1, zeta, ...,
zeta^(p-2), reduced modulo p^k.  Since p*o = pi^(p-1)*o, working modulo p^k
is the same as working modulo pi^N with N = k(p-1); N is the pi-adic
precision reported everywhere.

Valuations go through the pi-power basis 1, pi, ..., pi^(p-2): the change of
basis zeta = 1 - pi is unimodular over Z, and the terms d_j pi^j have
pairwise distinct valuations (p-1) v_p(d_j) + j, so the minimum is exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import comb

import numpy as np

from . import arith
from .errors import (
    BadGaloisIndex,
    BadPrecision,
    ContextMismatch,
    DivisibleByP,
    NotAnOddPrime,
    NotAPthPower,
    NotAUnit,
    PrecisionTooLow,
)

DEFAULT_K = 4


@dataclass(frozen=True)
class ValuationResult:
    """A pi-adic (or pi_L-adic) valuation known exactly or only as a lower bound."""

    value: int
    exact: bool

    @classmethod
    def at_least(cls, bound: int) -> "ValuationResult":
        return cls(bound, False)

    def at_least_n(self, n: int) -> bool:
        """Certified answer to ``v >= n``; raises when precision cannot decide."""
        if self.exact or n <= self.value:
            return self.value >= n
        raise PrecisionTooLow(f"valuation known only to be >= {self.value}, asked >= {n}")

    def __str__(self):
        return str(self.value) if self.exact else f">={self.value}"


@dataclass(frozen=True)
class PadicScalar:
    """An element of Z_p known modulo p^k."""

    value: int
    p: int
    k: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.p**self.k)

    def valuation(self) -> ValuationResult:
        if self.value == 0:
            return ValuationResult.at_least(self.k)
        return ValuationResult(arith.vp(self.value, self.p, self.k), True)

    @property
    def precision_loss(self) -> bool:
        """True when not a single significant p-adic digit survives."""
        return self.value == 0

    def __eq__(self, other):
        if isinstance(other, int):
            return (self.value - other) % self.p**self.k == 0
        if isinstance(other, PadicScalar):
            return (self.p, self.k, self.value) == (other.p, other.k, other.value)
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.k, self.value))

    def __int__(self):
        return self.value


class RingContext:
    """Shared data for Z_p[zeta] modulo p^k; build it with :func:`make_context`."""

    def __init__(self, p: int, k: int):
        if p == 2 or not arith.is_prime(p):
            raise NotAnOddPrime(f"p = {p} is not an odd prime")
        if k < 1:
            raise BadPrecision(f"coefficient precision k = {k} must be >= 1")
        self.p = p
        self.k = k
        self.n = p - 1
        self.N = k * (p - 1)
        self.modulus = p**k
        M, n = self.modulus, self.n
        # d = to_pi @ c  and  c = from_pi @ d
        self.to_pi = tuple(tuple((-1) ** j * comb(i, j) % M for i in range(n)) for j in range(n))
        self.from_pi = tuple(tuple((-1) ** i * comb(j, i) % M for j in range(n)) for i in range(n))
        self._check_basis_change()
        self._check_wilson()

    def __repr__(self):
        return f"RingContext(p={self.p}, k={self.k})"

    def __eq__(self, other):
        return isinstance(other, RingContext) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self):
        return hash((self.p, self.k))

    def __reduce__(self):
        return make_context, (self.p, self.k)

    def _check_basis_change(self):
        n, M = self.n, self.modulus
        for i in range(n):
            for j in range(n):
                s = sum(self.from_pi[i][t] * self.to_pi[t][j] for t in range(n)) % M
                if s != (i == j):
                    raise AssertionError("pi-basis change matrices are not inverse")

    def _check_wilson(self):
        # p / pi^(p-1) = prod_a (1 + zeta + ... + zeta^(a-1)), which is -1 mod pi
        target = self.p_over_pi_power
        if target.residue() != self.p - 1:
            raise AssertionError("Wilson normalisation p/pi^(p-1) = -1 mod pi failed")
        if self.pi ** (self.p - 1) * target != self.scalar(self.p):
            raise AssertionError("pi^(p-1) * prod c_a != p")

    # constructors
    def elem(self, coeffs) -> "CycloElem":
        coeffs = list(coeffs)
        if len(coeffs) > self.n:
            return _reduce_cyclic(self, coeffs)
        coeffs += [0] * (self.n - len(coeffs))
        return CycloElem(self, coeffs)

    def scalar(self, c: int) -> "CycloElem":
        return CycloElem(self, [c] + [0] * (self.n - 1))

    @cached_property
    def zero(self):
        return self.scalar(0)

    @cached_property
    def one(self):
        return self.scalar(1)

    @cached_property
    def zeta(self):
        return self.zeta_power(1)

    def zeta_power(self, e: int) -> "CycloElem":
        e %= self.p
        if e == self.p - 1:
            return CycloElem(self, [-1] * self.n)
        c = [0] * self.n
        c[e] = 1
        return CycloElem(self, c)

    @cached_property
    def pi(self):
        return self.one - self.zeta

    @cached_property
    def p_over_pi_power(self):
        out = self.one
        for a in range(2, self.p):
            out = out * self.elem([1] * a)
        return out

    def teichmuller(self, a: int) -> "CycloElem":
        return self.scalar(teichmuller_int(a, self.p, self.k))

    @cached_property
    def varpi(self) -> "CycloElem":
        return canonical_varpi(self)

    @lru_cache(maxsize=None)
    def varpi_power(self, e: int) -> "CycloElem":
        return self.varpi**e

    @lru_cache(maxsize=None)
    def eta(self, n: int) -> "CycloElem":
        """Frame element 1 + varpi^n."""
        return self.one + self.varpi_power(n)

    @lru_cache(maxsize=None)
    def eta_inverse_power(self, n: int, d: int) -> "CycloElem":
        return self.eta(n).invert() ** d


@lru_cache(maxsize=None)
def make_context(p: int, k: int = DEFAULT_K) -> RingContext:
    return RingContext(p, k)


def _reduce_cyclic(ctx: RingContext, coeffs) -> "CycloElem":
    """Reduce sum c_i zeta^i (any length) modulo zeta^p - 1 and Phi_p."""
    p = ctx.p
    if len(coeffs) <= 2 * p and arith.int64_safe(2 * p, ctx.modulus):
        acc = np.zeros(2 * p, dtype=np.int64)
        acc[: len(coeffs)] = coeffs
        acc = acc[:p] + acc[p:]
        return CycloElem._from_reduced(ctx, tuple(((acc[: p - 1] - acc[p - 1]) % ctx.modulus).tolist()))
    acc = [0] * p
    for i, c in enumerate(coeffs):
        acc[i % p] += c
    top = acc[p - 1]
    return CycloElem(ctx, [c - top for c in acc[: p - 1]])


class CycloElem:
    """Element of Z_p[zeta] modulo p^k, immutable."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: RingContext, coeffs):
        M = ctx.modulus
        self.ctx = ctx
        self.coeffs = tuple(int(c) % M for c in coeffs)
        if len(self.coeffs) != ctx.n:
            raise ValueError(f"expected {ctx.n} coefficients, got {len(self.coeffs)}")

    @classmethod
    def _from_reduced(cls, ctx: RingContext, coeffs: tuple) -> "CycloElem":
        obj = object.__new__(cls)
        obj.ctx = ctx
        obj.coeffs = coeffs
        return obj

    def _coerce(self, other) -> "CycloElem":
        if isinstance(other, CycloElem):
            if other.ctx != self.ctx:
                raise ContextMismatch(f"{self.ctx} vs {other.ctx}")
            return other
        if isinstance(other, int):
            return self.ctx.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloElem(self.ctx, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloElem(self.ctx, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloElem(self.ctx, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CycloElem(self.ctx, [a * other for a in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prod = arith.convolve(self.coeffs, other.coeffs, self.ctx.modulus)
        return _reduce_cyclic(self.ctx, prod)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.invert()

    def __pow__(self, e: int):
        if e < 0:
            return self.invert() ** (-e)
        result, base = self.ctx.one, self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ctx.scalar(other)
        if not isinstance(other, CycloElem):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx.p, self.ctx.k, self.coeffs))

    def __repr__(self):
        return f"CycloElem(p={self.ctx.p}, k={self.ctx.k}, {format_element(self)})"

    def __str__(self):
        return format_element(self)

    # structure
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def residue(self) -> int:
        """Image in o/pi = F_p (zeta maps to 1)."""
        return sum(self.coeffs) % self.ctx.p

    def pi_coeffs(self) -> list[int]:
        """Coordinates in the basis 1, pi, ..., pi^(p-2), modulo p^k."""
        return arith.matvec_mod(self.ctx.to_pi, self.coeffs, self.ctx.modulus)

    def valuation(self) -> ValuationResult:
        return pi_valuation(self)

    def leading_term(self) -> tuple[int, int]:
        """``(n, c)`` with self = c * pi^n mod pi^(n+1) and c in [1, p-1].

        Raises PrecisionTooLow when the element vanishes at working precision.
        """
        p, k = self.ctx.p, self.ctx.k
        best = None
        for j, d in enumerate(self.pi_coeffs()):
            if d == 0:
                continue
            s = arith.vp(d, p, k)
            v = (p - 1) * s + j
            if best is None or v < best[0]:
                best = (v, d, s)
        if best is None:
            raise PrecisionTooLow("element is zero at working precision")
        v, d, s = best
        # p = -pi^(p-1) mod pi^p, so p^s pi^j = (-1)^s pi^v to first order
        return v, (d // p**s) * (-1) ** s % p

    def is_unit(self) -> bool:
        return self.residue() != 0

    def invert(self) -> "CycloElem":
        return invert(self)

    def galois(self, j: int) -> "CycloElem":
        return galois_apply(self, j)

    def to_dict(self) -> dict:
        return {"p": self.ctx.p, "k": self.ctx.k, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_dict(cls, data: dict) -> "CycloElem":
        ctx = make_context(int(data["p"]), int(data["k"]))
        return cls(ctx, [int(c) for c in data["coeffs"]])


def format_element(x: CycloElem) -> str:
    """Canonical text form, readable back by the expression parser."""
    terms = []
    for i, c in enumerate(x.coeffs):
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            mono = "zeta" if i == 1 else f"zeta^{i}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
    return " + ".join(terms) if terms else "0"


# operations


def ring_arith(op: str, x: CycloElem, y: CycloElem) -> CycloElem:
    if x.ctx != y.ctx:
        raise ContextMismatch(f"{x.ctx} vs {y.ctx}")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    raise ValueError(f"unknown ring operation {op!r}")


def pi_valuation(x: CycloElem) -> ValuationResult:
    p, k = x.ctx.p, x.ctx.k
    best = x.ctx.N
    for j, d in enumerate(x.pi_coeffs()):
        if d:
            best = min(best, (p - 1) * arith.vp(d, p, k) + j)
    if best >= x.ctx.N:
        return ValuationResult.at_least(x.ctx.N)
    return ValuationResult(best, True)


def invert(x: CycloElem) -> CycloElem:
    """Inverse of a unit by Newton iteration from the residue-field inverse.

    If x*y = 1 - e with v(e) = m then x*y*(2 - x*y) = 1 - e^2, so the
    pi-adic error doubles each round.
    """
    ctx = x.ctx
    r = x.residue()
    if r == 0:
        raise NotAUnit(f"{x} has positive pi-valuation")
    y = ctx.scalar(pow(r, -1, ctx.p))
    m = 1
    while True:
        err = ctx.one - x * y
        if err.is_zero():
            return y
        y = y + y * err
        m *= 2
        if m > 2 * ctx.N:
            raise AssertionError("Newton inversion failed to converge")


def galois_apply(x: CycloElem, j: int) -> CycloElem:
    """sigma_j: zeta -> zeta^j."""
    p = x.ctx.p
    if j % p == 0:
        raise BadGaloisIndex(f"sigma_{j} is not defined (j = 0 mod p)")
    acc = [0] * p
    for i, c in enumerate(x.coeffs):
        acc[i * j % p] += c
    return _reduce_cyclic(x.ctx, acc)


def absolute_norm(x: CycloElem) -> PadicScalar:
    """N_{K|Q_p}(x) as the product of the p-1 Galois conjugates."""
    ctx = x.ctx
    out = x
    for j in range(2, ctx.p):
        out = out * galois_apply(x, j)
    if any(out.coeffs[1:]):
        raise AssertionError("Galois product is not a rational scalar")
    return PadicScalar(out.coeffs[0], ctx.p, ctx.k)


def multiplication_matrix(x: CycloElem) -> list[list[int]]:
    """Matrix of y -> x*y in the zeta-power basis (columns are x*zeta^i)."""
    ctx = x.ctx
    cols = [(x * ctx.zeta_power(i)).coeffs for i in range(ctx.n)]
    return [[cols[i][r] for i in range(ctx.n)] for r in range(ctx.n)]


def absolute_norm_det(x: CycloElem) -> PadicScalar:
    """N_{K|Q_p}(x) as det of the multiplication-by-x matrix."""
    return PadicScalar(arith.det_bareiss(multiplication_matrix(x)), x.ctx.p, x.ctx.k)


def half_norm(x: CycloElem) -> CycloElem:
    """N_{K|K+}(x) = x * sigma_{-1}(x)."""
    return x * galois_apply(x, -1)


def teichmuller_int(a: int, p: int, k: int) -> int:
    """Teichmüller lift of a mod p to Z/p^k, by Newton on t^(p-1) - 1."""
    if a % p == 0:
        raise DivisibleByP(f"{a} is divisible by {p}")
    M = p**k
    t = a % p
    for _ in range(k.bit_length() + 2):
        f = (pow(t, p - 1, M) - 1) % M
        if f == 0:
            return t
        df = (p - 1) * pow(t, p - 2, M) % M
        t = (t - f * pow(df, -1, M)) % M
    raise AssertionError("Teichmüller iteration failed to converge")


def teichmuller(ctx: RingContext, a: int) -> CycloElem:
    return ctx.teichmuller(a)


def canonical_varpi(ctx: RingContext) -> CycloElem:
    """The root of X^(p-1) + p with varpi/pi = 1 mod pi.

    varpi = pi*y where y^(p-1) = -p/pi^(p-1) = -prod_a c_a, a 1-unit; y is the
    Newton lift from y = 1 (the derivative (p-1)y^(p-2) is a unit).
    """
    if ctx.k < 2:
        raise PrecisionTooLow("canonical varpi needs k >= 2")
    target = -ctx.p_over_pi_power
    e = ctx.p - 1
    y = ctx.one
    for _ in range(ctx.N.bit_length() + 2):
        f = y**e - target
        if f.is_zero():
            break
        y = y - f * ((y ** (e - 1)) * e).invert()
    else:
        raise AssertionError("Newton iteration for varpi failed to converge")
    varpi = ctx.pi * y
    if varpi**e + ctx.p != ctx.zero:
        raise AssertionError("varpi^(p-1) + p != 0")
    if pi_valuation(varpi) != ValuationResult(1, True):
        raise AssertionError("varpi is not a uniformiser")
    return varpi


def split_teichmuller(x: CycloElem) -> tuple[int, CycloElem]:
    """``(a, u)`` with x = <a> * u, a in [1, p-1], u a 1-unit."""
    a = x.residue()
    if a == 0:
        raise NotAUnit(f"{x} is not a unit")
    return a, x * x.ctx.teichmuller(a).invert()


def pth_root(x: CycloElem) -> CycloElem:
    """A p-th root of x with 1-unit part in U_2.

    The Teichmüller factor is its own p-th root (<a>^p = <a> since p = 1 mod
    p-1).  The 1-unit part is lifted digit by digit: if the residual error is
    1 + c*varpi^m with m >= p+1, the factor w = 1 - c*varpi^(m-p+1) satisfies
    w^p = 1 + c*varpi^m mod pi^(m+1) because p*varpi^j = -varpi^(j+p-1) and
    every other binomial term has valuation > m once j = m-p+1 >= 2.
    """
    ctx = x.ctx
    p, N = ctx.p, ctx.N
    if N < 2 * p:
        raise PrecisionTooLow(f"pth_root needs pi-precision >= {2 * p}, have {N}")
    a, u = split_teichmuller(x)
    # u/root^p - 1 and u - root^p share their leading term (root^p is a 1-unit)
    root, root_p = ctx.one, ctx.one
    while True:
        diff = u - root_p
        if diff.is_zero():
            break
        m, c = diff.leading_term()
        if m < p + 1:
            raise NotAPthPower(f"1-unit part has level {m} < {p + 1}")
        w = ctx.one - ctx.varpi_power(m - (p - 1)) * c
        root = root * w
        root_p = root_p * w**p
    return ctx.teichmuller(a) * root
