import pytest
from hypothesis import given, strategies as st

from kummerlab import errors
from kummerlab.cyclo import (
    CycloElem,
    absolute_norm,
    absolute_norm_det,
    canonical_varpi,
    format_element,
    galois_apply,
    half_norm,
    invert,
    make_context,
    pi_valuation,
    pth_root,
    ring_arith,
    teichmuller,
    teichmuller_int,
)

from conftest import SMALL_PRIMES, elements

primes = st.sampled_from(SMALL_PRIMES)


def test_context_precision():
    assert make_context(5, 4).N == 16


@pytest.mark.parametrize("p, k", [(2, 3), (9, 2), (1, 2), (15, 3)])
def test_context_rejects_non_odd_primes(p, k):
    with pytest.raises(errors.NotAnOddPrime):
        make_context(p, k)


def test_context_rejects_bad_precision():
    with pytest.raises(errors.BadPrecision):
        make_context(5, 0)


def test_mixing_contexts_is_an_error():
    with pytest.raises(errors.ContextMismatch):
        make_context(5, 4).zeta + make_context(7, 4).zeta


def test_geometric_sum_times_one_minus_zeta():
    ctx = make_context(5, 4)
    z = ctx.zeta
    prod = ring_arith("mul", 1 - z, 1 + z + z**2 + z**3)
    assert prod == ctx.elem([2, 1, 1, 1])
    assert format_element(prod) == "2 + zeta + zeta^2 + zeta^3"


def test_zeta_has_order_p():
    ctx = make_context(5, 4)
    assert ctx.zeta**2 * ctx.zeta**3 == ctx.one
    assert ring_arith("add", ctx.zeta, ctx.zero) == ctx.zeta


def test_inverse_of_one_plus_zeta_mod_5():
    # (1+z)(4z+4z^3) = 4(z+z^2+z^3+z^4) = -4 = 1 mod 5
    ctx = make_context(5, 1)
    assert invert(1 + ctx.zeta) == ctx.elem([0, 4, 0, 4])
    assert invert(ctx.one) == ctx.one


def test_inverse_of_pi_is_refused():
    with pytest.raises(errors.NotAUnit):
        invert(make_context(7, 3).pi)


@given(st.data())
def test_inverse_roundtrip(data):
    ctx = make_context(data.draw(primes), 3)
    x = data.draw(elements(ctx, unit=True))
    assert x * invert(x) == 1


@given(st.data())
def test_ring_axioms(data):
    ctx = make_context(data.draw(primes), 3)
    x, y, z = (data.draw(elements(ctx)) for _ in range(3))
    assert x * (y + z) == x * y + x * z
    assert (x * y) * z == x * (y * z)
    assert x - x == ctx.zero


def test_basic_valuations():
    for p in SMALL_PRIMES:
        ctx = make_context(p, 4)
        assert pi_valuation(1 - ctx.zeta).value == 1
        assert pi_valuation(ctx.scalar(p)).value == p - 1
        assert pi_valuation(ctx.zeta).value == 0
        assert not pi_valuation(ctx.zero).exact


def test_valuation_of_zero_is_precision_bounded():
    ctx = make_context(5, 4)
    v = ctx.zero.valuation()
    assert v.value == ctx.N and not v.exact
    assert v.at_least_n(ctx.N)
    with pytest.raises(errors.PrecisionTooLow):
        v.at_least_n(ctx.N + 1)


@given(st.data())
def test_valuation_is_additive(data):
    ctx = make_context(data.draw(primes), 4)
    x, y = data.draw(elements(ctx)), data.draw(elements(ctx))
    vx, vy = x.valuation(), y.valuation()
    if vx.exact and vy.exact and vx.value + vy.value < ctx.N:
        assert (x * y).valuation().value == vx.value + vy.value


def test_galois_action():
    ctx = make_context(5, 4)
    x = ctx.elem([3, 1, 4, 1])
    assert galois_apply(x, 1) == x
    assert galois_apply(ctx.zeta, 2) == ctx.zeta**2
    for p in SMALL_PRIMES:
        c = make_context(p, 4)
        assert galois_apply(c.varpi, -1) == -c.varpi
    with pytest.raises(errors.BadGaloisIndex):
        galois_apply(x, 5)


@given(st.data())
def test_galois_is_a_ring_map(data):
    ctx = make_context(data.draw(primes), 3)
    j = data.draw(st.integers(1, ctx.p - 1))
    x, y = data.draw(elements(ctx)), data.draw(elements(ctx))
    assert galois_apply(x * y, j) == galois_apply(x, j) * galois_apply(y, j)


def test_norm_examples():
    for p in SMALL_PRIMES:
        ctx = make_context(p, 4)
        assert absolute_norm(1 - ctx.zeta) == p
        assert absolute_norm(ctx.scalar(3)) == 3 ** (p - 1)
    assert absolute_norm(1 + make_context(5, 4).zeta) == 1


@given(st.data())
def test_norm_two_paths_agree(data):
    ctx = make_context(data.draw(primes), 3)
    x = data.draw(elements(ctx))
    assert absolute_norm(x) == absolute_norm_det(x)


def test_half_norm_examples():
    for p in SMALL_PRIMES:
        ctx = make_context(p, 4)
        assert half_norm(ctx.zeta) == 1
        assert half_norm(ctx.scalar(3)) == 9
        for a in range(1, p, 2):
            assert half_norm(1 + ctx.varpi**a) == 1 - ctx.varpi ** (2 * a)


def test_teichmuller():
    assert teichmuller(make_context(5, 2), 2) == 7
    assert teichmuller(make_context(5, 4), 1) == 1
    with pytest.raises(errors.DivisibleByP):
        teichmuller(make_context(5, 4), 10)
    for p in SMALL_PRIMES:
        for a in range(1, p):
            t = teichmuller_int(a, p, 5)
            assert pow(t, p - 1, p**5) == 1 and t % p == a


def test_canonical_varpi():
    for p in SMALL_PRIMES:
        ctx = make_context(p, 4)
        w = canonical_varpi(ctx)
        assert (w ** (p - 1) + p).is_zero()
        assert w.valuation().value == 1
        assert (w - ctx.pi).valuation().at_least_n(2)
    with pytest.raises(errors.PrecisionTooLow):
        canonical_varpi(make_context(5, 1))


def test_pth_root_examples():
    for p in SMALL_PRIMES:
        ctx = make_context(p, 4)
        y = 1 + ctx.pi**2
        r = pth_root(y**p)
        # roots are unique only modulo pi^(N-(p-1))
        assert (r - y).valuation().at_least_n(ctx.N - (p - 1))
        assert pth_root(ctx.one) == 1
        with pytest.raises(errors.NotAPthPower):
            pth_root(ctx.scalar(1 + p))


@given(st.data())
def test_pth_root_roundtrip(data):
    ctx = make_context(data.draw(primes), 4)
    y = data.draw(elements(ctx, unit=True))
    r = pth_root(y**ctx.p)
    assert (r**ctx.p - y**ctx.p).valuation().at_least_n(ctx.N - (ctx.p - 1))


def test_pth_root_refuses_low_precision():
    with pytest.raises(errors.PrecisionTooLow):
        pth_root(make_context(7, 1).one)


@given(st.data())
def test_serialization_roundtrip(data):
    ctx = make_context(data.draw(primes), 3)
    x = data.draw(elements(ctx))
    assert CycloElem.from_dict(x.to_dict()) == x


def test_contexts_pickle():
    import pickle

    ctx = make_context(7, 3)
    assert pickle.loads(pickle.dumps(ctx)) is ctx
