import pytest
from hypothesis import given, strategies as st

from kummerlab import errors
from kummerlab.classify import classify, is_primaire, is_primar, teich_split, unit_class_level
from kummerlab.cyclo import make_context, teichmuller

from conftest import SMALL_PRIMES, elements

primes = st.sampled_from(SMALL_PRIMES)


def test_teich_split_examples():
    ctx = make_context(5, 4)
    assert teich_split(1 + ctx.pi) == (1, 1 + ctx.pi)
    a, u = teich_split(ctx.scalar(2))
    assert a == 2 and u * teichmuller(ctx, 2) == 2
    assert unit_class_level(u) >= 1
    assert teich_split(ctx.zeta) == (1, ctx.zeta)


@given(st.data())
def test_teich_split_recombines(data):
    ctx = make_context(data.draw(primes), 4)
    x = data.draw(elements(ctx, unit=True))
    a, u = teich_split(x)
    assert teichmuller(ctx, a) * u == x
    assert (u - 1).valuation().at_least_n(1)


def test_levels():
    for p in SMALL_PRIMES:
        ctx = make_context(p, 4)
        assert unit_class_level(ctx.scalar(1 + p)) == p - 1
        assert unit_class_level(ctx.zeta) == 1
        assert unit_class_level((1 + ctx.pi**2) ** p) == p + 1


def test_level_needs_precision():
    with pytest.raises(errors.PrecisionTooLow):
        unit_class_level(make_context(7, 1).zeta)


def test_nonunits_are_refused():
    ctx = make_context(5, 4)
    for f in (classify, is_primaire, is_primar, unit_class_level):
        with pytest.raises(errors.NotAUnit):
            f(ctx.pi)


def test_primaire_examples():
    ctx = make_context(5, 4)
    assert is_primaire(ctx.scalar(6))[0]
    assert is_primaire(ctx.scalar(7)) == (True, 2)
    assert not is_primaire(ctx.zeta)[0]


def test_primar_examples():
    ctx7 = make_context(7, 4)
    assert is_primar(1 + ctx7.varpi**5)[0]
    ctx5 = make_context(5, 4)
    assert not is_primar(1 + ctx5.varpi)[0]
    for p in SMALL_PRIMES:
        ctx = make_context(p, 4)
        assert is_primar((1 + ctx.pi**2) ** p)[0]


def test_classify_one_plus_p():
    for p in SMALL_PRIMES:
        r = classify(make_context(p, 4).scalar(1 + p))
        assert (r.is_primaire, r.is_primar, r.is_p_primary, r.is_pth_power) == (True, True, False, False)
        assert r.level == p - 1


def test_classify_primar_not_primaire_at_11():
    ctx = make_context(11, 4)
    r = classify(1 + ctx.varpi**9)
    assert r.is_primar and not r.is_primaire and not r.is_p_primary


def test_classify_one():
    r = classify(make_context(7, 4).one)
    assert r.is_pth_power and r.is_p_primary and r.is_primaire and r.is_primar
    assert r.level == 8


@given(st.data())
def test_implication_chain(data):
    ctx = make_context(data.draw(primes), 4)
    x = data.draw(elements(ctx, unit=True))
    assert classify(x).chain_holds()


@given(st.data())
def test_pth_powers_are_everything(data):
    ctx = make_context(data.draw(primes), 4)
    y = data.draw(elements(ctx, unit=True))
    r = classify(y**ctx.p)
    assert r.is_pth_power and r.level == ctx.p + 1 and r.chain_holds()


@given(st.data())
def test_classes_are_invariant_under_pth_powers(data):
    ctx = make_context(data.draw(primes), 4)
    x = data.draw(elements(ctx, unit=True))
    y = data.draw(elements(ctx, unit=True))
    a, b = classify(x), classify(x * y**ctx.p)
    assert (a.is_pth_power, a.is_p_primary, a.is_primar) == (b.is_pth_power, b.is_p_primary, b.is_primar)
    assert a.level == b.level


def test_report_serializes_without_floats():
    d = classify(make_context(5, 4).scalar(7)).to_dict()
    assert d["primaire_witness"] == "2"
    assert all(not isinstance(v, float) for v in d.values())
