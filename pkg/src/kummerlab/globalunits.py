"""Global cyclotomic units, their local classes, and the local step of Kummer's lemma.

The unit image E-bar is generated by -zeta and the cyclotomic units
c_a = 1 + zeta + ... + zeta^(a-1), 2 <= a <= (p-1)/2.  These generate a
finite-index subgroup of Z[zeta]^x; the index is prime to p whenever the
real class number h+ is, which holds for every p this package tests.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import arith
from .classes import (
    Subspace,
    digit_coordinates,
    filtration_subspace,
    primar_kernel,
    primar_subspace,
    span,
)
from .classify import ClassificationReport, classify, is_primaire, is_primar
from .cyclo import CycloElem, RingContext, absolute_norm, galois_apply, half_norm, pth_root
from .errors import (
    BadIndex,
    CertificateImpossible,
    IntersectionNonTrivial,
    NotAPthPower,
    NotAUnit,
    OutOfConfiguredRange,
)

REGULARITY_BOUND = 150

E_BAR_ASSUMPTION = (
    "E-bar is spanned by -zeta and the cyclotomic units c_a; this is the image of all "
    "of Z[zeta]^x when p does not divide the real class number h+"
)


@dataclass(frozen=True)
class GlobalUnit:
    """u in Z[zeta], as integer coefficients in the basis 1, zeta, ..., zeta^(p-2)."""

    p: int
    coeffs: tuple[int, ...]
    label: str

    def local(self, ctx: RingContext) -> CycloElem:
        return ctx.elem(self.coeffs)


def cyclotomic_unit(p: int, a: int) -> GlobalUnit:
    """c_a = (1 - zeta^a)/(1 - zeta)."""
    if not 2 <= a <= p - 1 or a % p == 0:
        raise BadIndex(f"cyclotomic unit index {a} outside [2, {p - 1}]")
    coeffs = [1] * a if a < p - 1 else [1] * (p - 1)
    return GlobalUnit(p, tuple(coeffs + [0] * (p - 1 - len(coeffs))), f"c_{a}")


def minus_zeta(p: int) -> GlobalUnit:
    return GlobalUnit(p, tuple([0, -1] + [0] * (p - 3)), "-zeta")


def generators(p: int) -> list[GlobalUnit]:
    return [minus_zeta(p)] + [cyclotomic_unit(p, a) for a in range(2, (p - 1) // 2 + 1)]


@dataclass(frozen=True)
class ExponentVector:
    """Exponents over ``generators(p)``; the product is a global unit."""

    p: int
    exponents: tuple[int, ...]

    def local(self, ctx: RingContext) -> CycloElem:
        out = ctx.one
        for (g, g_inv), e in zip(_local_generators(ctx), self.exponents):
            if e:
                out = out * (g**e if e > 0 else g_inv ** (-e))
        return out


@lru_cache(maxsize=None)
def _local_generators(ctx: RingContext) -> tuple[tuple[CycloElem, CycloElem], ...]:
    return tuple((g.local(ctx), g.local(ctx).invert()) for g in generators(ctx.p))


def split_real(u: CycloElem) -> tuple[CycloElem, CycloElem]:
    """u = xi * w with xi^p = 1 and w fixed by sigma_{-1}.

    u / sigma_{-1}(u) = xi^2, and (p+1)/2 halves exponents in mu_p.
    """
    if not u.is_unit():
        raise NotAUnit(f"{u} is not a unit")
    p = u.ctx.p
    xi = (u * galois_apply(u, -1).invert()) ** ((p + 1) // 2)
    w = u * xi.invert()
    if xi**p != 1 or galois_apply(w, -1) != w or xi * w != u:
        raise AssertionError("split_real postconditions failed")
    return xi, w


def global_image(ctx: RingContext) -> Subspace:
    return span((digit_coordinates(g.local(ctx)) for g in generators(ctx.p)), ctx.p)


@dataclass
class GlobalReport:
    p: int
    k: int
    generator_labels: list[str]
    generator_norms_one: bool
    dim_E: int
    dim_P_basis: int
    dim_P: int
    dim_U_pm1: int
    dim_E_cap_P: int
    dim_E_cap_U_pm1: int
    samples: int = 0
    sampled_primar: int = 0
    certificates: list[dict] = field(default_factory=list)
    assumption: str = E_BAR_ASSUMPTION

    @property
    def ok(self) -> bool:
        return (self.generator_norms_one and self.dim_E_cap_P == 0
                and self.dim_E_cap_U_pm1 == 0)

    def to_dict(self) -> dict:
        d = dict(self.__dict__)
        d["ok"] = self.ok
        return d


def sample_exponents(p: int, rng: random.Random) -> ExponentVector:
    """Random exponents; half the samples are multiples of p, so that the
    trivial class (the only primär one) is actually hit."""
    r = (p - 1) // 2
    if rng.random() < 0.5:
        exps = [p * rng.randrange(-2, 3) for _ in range(r)]
    else:
        exps = [rng.randrange(-p, p) for _ in range(r)]
    return ExponentVector(p, tuple(exps))


def check_global_intersections(ctx: RingContext, samples: int = 0, seed: int = 0,
                      max_certificates: int = 3) -> GlobalReport:
    """E-bar cap P-bar = 0 and E-bar cap U-bar_{p-1} = 0, plus certificates.

    P-bar here is the full image of primär units (computed as a kernel);
    it contains the span of the 1 + varpi^a basis, so this is the stronger
    check.
    """
    p = ctx.p
    gens = generators(p)
    norms_one = all(absolute_norm(g.local(ctx)) == 1 for g in gens)
    E = global_image(ctx)
    P = primar_kernel(ctx)
    P_basis = primar_subspace(ctx)
    U = filtration_subspace(ctx, p - 1)
    report = GlobalReport(
        p=p, k=ctx.k,
        generator_labels=[g.label for g in gens],
        generator_norms_one=norms_one,
        dim_E=E.dim,
        dim_P_basis=P_basis.dim,
        dim_P=P.dim,
        dim_U_pm1=U.dim,
        dim_E_cap_P=E.intersect(P).dim,
        dim_E_cap_U_pm1=E.intersect(U).dim,
    )
    rng = random.Random(f"global:{seed}:{p}")
    for _ in range(samples):
        ev = sample_exponents(p, rng)
        u = ev.local(ctx)
        if not is_primar(u)[0]:
            continue
        report.sampled_primar += 1
        cert = kummer_local_certificate(u)
        if len(report.certificates) < max_certificates:
            report.certificates.append({"exponents": list(ev.exponents), **cert})
    report.samples = samples
    return report


def require_trivial_intersections(report: GlobalReport):
    if not report.ok:
        raise IntersectionNonTrivial(
            f"p = {report.p}: dim(E cap P) = {report.dim_E_cap_P}, "
            f"dim(E cap U_(p-1)) = {report.dim_E_cap_U_pm1}")


def kummer_local_certificate(u: CycloElem) -> dict:
    """p-th root certificate for a primär unit, or a refusal with diagnostics."""
    ctx = u.ctx
    report: ClassificationReport = classify(u)
    if not report.is_primar:
        t = u.residue()
        cond1 = (u - t).valuation().at_least_n(2)
        return {
            "certified": False,
            "reason": "not primär",
            "congruent_mod_pi2": cond1,
            "half_norm_rational_mod_p": is_primaire(half_norm(u))[0],
            "is_primaire": report.is_primaire,
            "level": report.level,
        }
    try:
        y = pth_root(u)
    except NotAPthPower as exc:
        raise CertificateImpossible(f"primär unit is not a local p-th power: {exc}") from exc
    verified = (y**ctx.p - u).valuation()
    if not verified.at_least_n(ctx.N - (ctx.p - 1)):
        raise CertificateImpossible("root does not verify")
    return {
        "certified": True,
        "root": [str(c) for c in y.coeffs],
        "verified_level": verified.value,
        "level": report.level,
    }


# Bernoulli numbers and regularity


@lru_cache(maxsize=None)
def bernoulli_numbers(n: int) -> tuple[Fraction, ...]:
    """B_0..B_n by the Akiyama-Tanigawa recurrence (B_1 = +1/2 convention)."""
    out = []
    a = [Fraction(0)] * (n + 1)
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    return tuple(out)


def is_regular(p: int) -> tuple[bool, list[int]]:
    """Kummer's criterion: p regular iff p divides no numerator of B_2..B_{p-3}."""
    if p > REGULARITY_BOUND:
        raise OutOfConfiguredRange(f"p = {p} exceeds configured bound {REGULARITY_BOUND}")
    if p == 2 or not arith.is_prime(p):
        raise OutOfConfiguredRange(f"p = {p} is not an odd prime")
    B = bernoulli_numbers(max(p - 3, 0))
    bad = [k for k in range(2, p - 2, 2) if B[k].numerator % p == 0]
    return not bad, bad


def certificate_for(u: GlobalUnit | ExponentVector, ctx: RingContext) -> dict:
    return kummer_local_certificate(u.local(ctx))
