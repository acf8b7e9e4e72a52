"""Classification of local units of Z_p[zeta] under the four "primary" notions.

For a unit x = <a> * u with u a 1-unit (Teichmüller split):

* p-th power  <=> u lies in U_{p+1}
* p-primary   <=> u lies in U_p
* primaire    <=> x = a mod p for some a in Z_p^x
* primär      <=> x = a mod pi^2 and N_{K|K+}(x) = b mod p, a, b in Z_p^x

The Teichmüller factor is always a p-th power (it has order prime to p), and
every p-th power of a 1-unit lies in U_{p+1}, so the first two notions only
depend on the level of u.  The brute-force model in ``kummerlab.brute``
checks this against direct enumeration.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional

from .cyclo import CycloElem, half_norm, pi_valuation, split_teichmuller
from .errors import NotAUnit, PrecisionTooLow


@dataclass(frozen=True)
class ClassificationReport:
    is_pth_power: bool
    is_p_primary: bool
    is_primaire: bool
    is_primar: bool
    level: int
    teichmuller_residue: int
    primaire_witness: Optional[int]
    primar_witnesses: Optional[tuple[int, int]]
    precision_used: int

    def chain_holds(self) -> bool:
        implies = lambda a, b: (not a) or b  # noqa: E731
        return (implies(self.is_pth_power, self.is_p_primary)
                and implies(self.is_p_primary, self.is_primaire)
                and implies(self.is_primaire, self.is_primar))

    def to_dict(self) -> dict:
        d = asdict(self)
        if self.primaire_witness is not None:
            d["primaire_witness"] = str(self.primaire_witness)
        if self.primar_witnesses is not None:
            d["primar_witnesses"] = [str(w) for w in self.primar_witnesses]
        return d


def _require_unit(x: CycloElem):
    if not x.is_unit():
        raise NotAUnit(f"{x} is not a unit")


def teich_split(x: CycloElem) -> tuple[int, CycloElem]:
    return split_teichmuller(x)


def unit_class_level(x: CycloElem) -> int:
    """Filtration level of the 1-unit part, capped at p+1."""
    ctx = x.ctx
    if ctx.N < ctx.p + 1:
        raise PrecisionTooLow(f"level needs pi-precision >= {ctx.p + 1}, have {ctx.N}")
    _, u = teich_split(x)
    v = pi_valuation(u - 1)
    return min(ctx.p + 1, v.value)


def is_primaire(x: CycloElem) -> tuple[bool, Optional[int]]:
    # o/p has basis 1, zeta, ..., zeta^(p-2), so x = a mod p forces the
    # non-constant coefficients to vanish mod p
    _require_unit(x)
    p = x.ctx.p
    c0, *rest = x.coeffs
    if c0 % p and all(c % p == 0 for c in rest):
        return True, c0 % p
    return False, None


def is_primar(x: CycloElem) -> tuple[bool, Optional[tuple[int, int]]]:
    _require_unit(x)
    ctx = x.ctx
    if ctx.N < max(2, ctx.p - 1) + 1:
        raise PrecisionTooLow(f"primär test needs pi-precision > {max(2, ctx.p - 1)}")
    # a - t lies in pZ_p, inside pi^2 since p >= 3
    t = x.residue()
    if not pi_valuation(x - t).at_least_n(2):
        return False, None
    ok, b = is_primaire(half_norm(x))
    if not ok:
        return False, None
    return True, (t, b)


def classify(x: CycloElem) -> ClassificationReport:
    _require_unit(x)
    p = x.ctx.p
    level = unit_class_level(x)
    primaire, a = is_primaire(x)
    primar, ab = is_primar(x)
    report = ClassificationReport(
        is_pth_power=level >= p + 1,
        is_p_primary=level >= p,
        is_primaire=primaire,
        is_primar=primar,
        level=level,
        teichmuller_residue=x.residue(),
        primaire_witness=a,
        primar_witnesses=ab,
        precision_used=x.ctx.N,
    )
    if not report.chain_holds():
        raise AssertionError(f"implication chain violated for {x}: {report}")
    return report
