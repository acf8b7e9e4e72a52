"""Coordinates and F_p-linear algebra on o^x / o^{x p}.

Every 1-unit u satisfies u^p in U_{p+1}, so U_1/U_{p+1} is elementary
abelian of order p^p, and the frame eta_n = 1 + varpi^n (n = 1..p) gives an
isomorphism onto F_p^p: greedy cancellation of the leading digit, level by
level, reads off the exponents.  Group multiplication becomes vector
addition, so subgroups of the quotient are ordinary F_p-subspaces and can be
handled with Gaussian elimination.  Pivots are taken at the lowest nonzero
level, so an echelon basis also exhibits the filtration.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .classify import is_primar
from .cyclo import CycloElem, RingContext, half_norm, split_teichmuller
from .errors import GeneratorNotPrimar, PrecisionTooLow


@dataclass(frozen=True)
class UnitClassVector:
    """Digits d_1..d_p of a class; ``digits[n-1]`` is attached to level n."""

    p: int
    digits: tuple[int, ...]

    def __post_init__(self):
        if len(self.digits) != self.p:
            raise ValueError(f"need {self.p} digits, got {len(self.digits)}")
        object.__setattr__(self, "digits", tuple(d % self.p for d in self.digits))

    @classmethod
    def zero(cls, p: int) -> "UnitClassVector":
        return cls(p, (0,) * p)

    @classmethod
    def unit(cls, p: int, level: int) -> "UnitClassVector":
        d = [0] * p
        d[level - 1] = 1
        return cls(p, tuple(d))

    def __add__(self, other: "UnitClassVector") -> "UnitClassVector":
        return UnitClassVector(self.p, tuple(a + b for a, b in zip(self.digits, other.digits)))

    def __neg__(self):
        return UnitClassVector(self.p, tuple(-a for a in self.digits))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: int) -> "UnitClassVector":
        return UnitClassVector(self.p, tuple(a * c for a in self.digits))

    def is_zero(self) -> bool:
        return not any(self.digits)

    def pivot(self) -> int | None:
        """Lowest level carrying a nonzero digit."""
        for i, d in enumerate(self.digits):
            if d:
                return i + 1
        return None


def _rref(rows: Iterable[Sequence[int]], p: int) -> list[list[int]]:
    """Reduced row echelon form over F_p, pivots in increasing column order."""
    rows = [[x % p for x in r] for r in rows]
    rows = [r for r in rows if any(r)]
    if not rows:
        return []
    width = len(rows[0])
    out = []
    col = 0
    while rows and col < width:
        piv = next((r for r in rows if r[col]), None)
        if piv is None:
            col += 1
            continue
        rows.remove(piv)
        inv = pow(piv[col], -1, p)
        piv = [x * inv % p for x in piv]
        rows = [r if not r[col] else [(a - r[col] * b) % p for a, b in zip(r, piv)] for r in rows]
        out = [r if not r[col] else [(a - r[col] * b) % p for a, b in zip(r, piv)] for r in out]
        out.append(piv)
        rows = [r for r in rows if any(r)]
        col += 1
    return out


def nullspace(matrix: Sequence[Sequence[int]], ncols: int, p: int) -> list[list[int]]:
    """Basis of {x : matrix @ x = 0} over F_p."""
    red = _rref(matrix, p)
    pivots = [next(i for i, x in enumerate(r) if x) for r in red]
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        v = [0] * ncols
        v[free] = 1
        for r, pc in zip(red, pivots):
            v[pc] = -r[free] % p
        basis.append(v)
    return basis


@dataclass(frozen=True)
class Subspace:
    """Echelon basis of a subspace of F_p^p, pivot levels strictly increasing."""

    p: int
    rows: tuple[UnitClassVector, ...]

    @classmethod
    def spanned_by(cls, p: int, generators: Iterable[UnitClassVector]) -> "Subspace":
        red = _rref([g.digits for g in generators], p)
        return cls(p, tuple(UnitClassVector(p, tuple(r)) for r in red))

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def pivot_levels(self) -> list[int]:
        return [r.pivot() for r in self.rows]

    def contains(self, v: UnitClassVector) -> bool:
        p = self.p
        digits = list(v.digits)
        for row in self.rows:
            lvl = row.pivot()
            c = digits[lvl - 1]
            if c:
                digits = [(a - c * b) % p for a, b in zip(digits, row.digits)]
        return not any(digits)

    def __contains__(self, v: UnitClassVector) -> bool:
        return self.contains(v)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace.spanned_by(self.p, self.rows + other.rows)

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains(r) for r in self.rows)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.p == other.p and self.rows == other.rows

    def __hash__(self):
        return hash((self.p, self.rows))

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus: echelonise [a | a] and [b | 0]; rows [0 | c] span the meet."""
        p = self.p
        block = [list(a.digits) * 2 for a in self.rows]
        block += [list(b.digits) + [0] * p for b in other.rows]
        red = _rref(block, p)
        meet = [r[p:] for r in red if not any(r[:p])]
        return Subspace.spanned_by(p, (UnitClassVector(p, tuple(r)) for r in meet))

    def to_matrix(self) -> list[list[int]]:
        return [list(r.digits) for r in self.rows]


def span(generators: Iterable[UnitClassVector], p: int | None = None) -> Subspace:
    generators = list(generators)
    if p is None:
        if not generators:
            raise ValueError("span([]) needs p")
        p = generators[0].p
    return Subspace.spanned_by(p, generators)


def contains(S: Subspace, v: UnitClassVector) -> bool:
    return S.contains(v)


def _need_class_precision(ctx: RingContext):
    if ctx.N < ctx.p + 1:
        raise PrecisionTooLow(f"class coordinates need pi-precision >= {ctx.p + 1}, have {ctx.N}")
    _check_pth_powers_are_deep(ctx)


@lru_cache(maxsize=None)
def _check_pth_powers_are_deep(ctx: RingContext, trials: int = 100) -> None:
    """u^p in U_{p+1} for random 1-units u; the F_p-structure rests on it."""
    rng = random.Random(f"frame:{ctx.p}:{ctx.k}")
    for _ in range(trials):
        u = ctx.one + ctx.pi * ctx.elem([rng.randrange(ctx.modulus) for _ in range(ctx.n)])
        if not (u**ctx.p - 1).valuation().at_least_n(ctx.p + 1):
            raise AssertionError(f"p-th power of a 1-unit is not in U_{ctx.p + 1}: {u}")


def digit_coordinates(x: CycloElem) -> UnitClassVector:
    ctx = x.ctx
    p = ctx.p
    _need_class_precision(ctx)
    _, u = split_teichmuller(x)
    digits = [0] * p
    while True:
        diff = u - 1
        if diff.is_zero():
            break
        level, d = diff.leading_term()
        if level > p:
            break
        digits[level - 1] = d
        u = u * ctx.eta_inverse_power(level, d)
    return UnitClassVector(p, tuple(digits))


def reconstruct(v: UnitClassVector, ctx: RingContext) -> CycloElem:
    """prod eta_n^{d_n}: a unit whose class has coordinates v."""
    out = ctx.one
    for n, d in enumerate(v.digits, start=1):
        if d:
            out = out * ctx.eta(n) ** d
    return out


def filtration_subspace(ctx: RingContext, n: int) -> Subspace:
    """U-bar_n, spanned by the classes of eta_a for n <= a <= p."""
    p = ctx.p
    if not 1 <= n <= p + 1:
        raise ValueError(f"filtration index {n} outside [1, {p + 1}]")
    return span((digit_coordinates(ctx.eta(a)) for a in range(n, p + 1)), p)


def primar_indices(p: int) -> list[int]:
    """Odd a in [3, p-2] with 2a >= p-1."""
    return [a for a in range(3, p - 1, 2) if 2 * a >= p - 1]


def primar_subspace(ctx: RingContext) -> Subspace:
    """P-bar = U-bar_{p-1} + span{eta_a : a in primar_indices(p)}."""
    p = ctx.p
    gens = []
    for a in primar_indices(p):
        eta = ctx.eta(a)
        if not is_primar(eta)[0]:
            raise GeneratorNotPrimar(f"1 + varpi^{a} failed the primär test (p = {p})")
        gens.append(digit_coordinates(eta))
    return filtration_subspace(ctx, p - 1) + span(gens, p)


def primar_kernel(ctx: RingContext) -> Subspace:
    """P-bar computed as the kernel of a linear map, independently of its basis.

    For a class with 1-unit representative u, primär means v(u - 1) >= 2 and
    u * sigma_{-1}(u) in U_{p-1}.  Both conditions are the vanishing of a
    group homomorphism into an elementary abelian p-group: the level-1 digit,
    and the first p-2 digits of the half norm.
    """
    p = ctx.p
    images = []
    for n in range(1, p + 1):
        eta = ctx.eta(n)
        hn = digit_coordinates(half_norm(eta)).digits[: p - 2]
        images.append([digit_coordinates(eta).digits[0], *hn])
    # images[n] is the column for basis vector e_n
    rows = [[images[n][r] for n in range(p)] for r in range(len(images[0]))]
    basis = nullspace(rows, p, p)
    return span((UnitClassVector(p, tuple(b)) for b in basis), p)
