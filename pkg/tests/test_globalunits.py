from fractions import Fraction

import pytest

from kummerlab import errors
from kummerlab.classes import digit_coordinates
from kummerlab.cyclo import absolute_norm, galois_apply, make_context
from kummerlab.globalunits import (
    ExponentVector,
    bernoulli_numbers,
    check_global_intersections,
    cyclotomic_unit,
    generators,
    global_image,
    is_regular,
    kummer_local_certificate,
    minus_zeta,
    require_trivial_intersections,
    split_real,
)

GRID = (5, 7, 11, 13)


def test_cyclotomic_units():
    assert cyclotomic_unit(5, 2).local(make_context(5, 4)) == 1 + make_context(5, 4).zeta
    with pytest.raises(errors.BadIndex):
        cyclotomic_unit(7, 7)
    with pytest.raises(errors.BadIndex):
        cyclotomic_unit(7, 1)


@pytest.mark.parametrize("p", GRID)
def test_generators_have_norm_one(p):
    ctx = make_context(p, 4)
    for a in range(2, p):
        assert absolute_norm(cyclotomic_unit(p, a).local(ctx)) == 1
    assert len(generators(p)) == (p - 1) // 2


def test_exponent_vectors_multiply_out():
    ctx = make_context(7, 4)
    g = [u.local(ctx) for u in generators(7)]
    ev = ExponentVector(7, (2, -1, 3))
    assert ev.local(ctx) == g[0] ** 2 * g[1].invert() * g[2] ** 3


def test_split_real():
    ctx = make_context(5, 4)
    z = ctx.zeta
    xi, w = split_real(-z**3)
    assert xi == z**3 and w == -1
    assert split_real(ctx.scalar(6)) == (ctx.one, ctx.scalar(6))
    c = cyclotomic_unit(5, 2).local(ctx)
    real = c * galois_apply(c, -1)
    assert split_real(real) == (ctx.one, real)
    with pytest.raises(errors.NotAUnit):
        split_real(ctx.pi)


def test_global_image_dims():
    assert global_image(make_context(3, 4)).dim <= 1
    ctx = make_context(5, 4)
    E = global_image(ctx)
    assert E.dim <= 2
    assert digit_coordinates(cyclotomic_unit(5, 2).local(ctx) ** 5) in E


@pytest.mark.parametrize("p", GRID)
def test_intersections_are_trivial(p):
    report = check_global_intersections(make_context(p, 4), samples=40, seed=1)
    assert report.ok
    assert report.dim_E_cap_P == 0 and report.dim_E_cap_U_pm1 == 0
    assert report.dim_P_basis <= report.dim_P
    require_trivial_intersections(report)
    assert report.sampled_primar > 0
    assert all(c["certified"] for c in report.certificates)


def test_certificate_for_a_pth_power():
    for p in GRID:
        ctx = make_context(p, 4)
        u = cyclotomic_unit(p, 2).local(ctx) ** p
        cert = kummer_local_certificate(u)
        assert cert["certified"]
        assert cert["verified_level"] >= ctx.N - (p - 1)
        root = ctx.elem([int(c) for c in cert["root"]])
        assert (root**p - u).valuation().at_least_n(ctx.N - (p - 1))


def test_certificate_refusals():
    ctx = make_context(7, 4)
    cert = kummer_local_certificate(cyclotomic_unit(7, 2).local(ctx))
    assert not cert["certified"] and not cert["is_primaire"] and not cert["congruent_mod_pi2"]
    cert = kummer_local_certificate(minus_zeta(7).local(ctx))
    assert not cert["certified"] and cert["level"] == 1


def test_bernoulli_numbers():
    B = bernoulli_numbers(12)
    assert B[:5] == (1, Fraction(1, 2), Fraction(1, 6), 0, Fraction(-1, 30))
    assert B[12] == Fraction(-691, 2730)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 17, 19, 23, 29, 31])
def test_small_primes_are_regular(p):
    assert is_regular(p) == (True, [])


@pytest.mark.parametrize("p, idx", [(37, [32]), (59, [44]), (67, [58]), (101, [68]), (103, [24])])
def test_irregular_primes(p, idx):
    assert is_regular(p) == (False, idx)


@pytest.mark.parametrize("p", [151, 9, 2])
def test_regularity_range(p):
    with pytest.raises(errors.OutOfConfiguredRange):
        is_regular(p)
