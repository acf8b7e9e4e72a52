import random

import pytest
from hypothesis import given, strategies as st

from kummerlab import errors
from kummerlab.tame import (
    check_norm_level_sample,
    check_norm_sample,
    make_tame_context,
    sample_near,
    tame_norm,
    tame_norm_sweep,
    tame_valuation,
)

CELLS = [(p, e) for p in (2, 3, 5, 7) for e in (2, 3, 4, 6) if e % p]


def test_context_validation():
    make_tame_context(5, 4, 3)
    make_tame_context(2, 3, 4)
    with pytest.raises(errors.WildRamification):
        make_tame_context(5, 10, 3)
    with pytest.raises(errors.BadDegree):
        make_tame_context(5, 1, 3)
    with pytest.raises(errors.BadPrecision):
        make_tame_context(5, 2, 0)


@pytest.mark.parametrize("p, e", CELLS)
def test_valuations(p, e):
    ctx = make_tame_context(p, e, 3)
    assert tame_valuation(ctx.uniformizer).value == 1
    assert tame_valuation(ctx.scalar(p)).value == e
    assert tame_valuation(ctx.one).value == 0


@pytest.mark.parametrize("p, e", CELLS)
def test_norm_examples(p, e):
    ctx = make_tame_context(p, e, 3)
    assert tame_norm(ctx.scalar(3)).value == pow(3, e, p**3)
    assert tame_norm(ctx.uniformizer).value == (-1) ** e * p % p**3


def test_norm_of_one_plus_uniformizer():
    ctx = make_tame_context(5, 2, 3)
    assert tame_norm(1 + ctx.uniformizer).value == 6


@given(st.sampled_from(CELLS), st.data())
def test_norm_is_multiplicative(cell, data):
    p, e = cell
    ctx = make_tame_context(p, e, 3)
    coeff = st.integers(0, ctx.modulus - 1)
    x = ctx.elem(data.draw(st.lists(coeff, min_size=e, max_size=e)))
    y = ctx.elem(data.draw(st.lists(coeff, min_size=e, max_size=e)))
    assert tame_norm(x * y).value == tame_norm(x).value * tame_norm(y).value % ctx.modulus


@pytest.mark.parametrize("p, e", CELLS)
@pytest.mark.parametrize("r", [1, 2])
def test_boundary_witness_fails_hypothesis(p, e, r):
    ctx = make_tame_context(p, e, r + 2)
    v = check_norm_sample(ctx.scalar(1 + p**r), r)
    assert not v.hypothesis_met and v.holds


def test_trivial_cases():
    ctx = make_tame_context(3, 2, 4)
    assert check_norm_sample(ctx.one, 1).holds
    deep = ctx.one + ctx.scalar(3) * ctx.uniformizer
    assert check_norm_sample(deep, 1).conclusion_met


@pytest.mark.parametrize("p, e", CELLS)
@pytest.mark.parametrize("r", [1, 2])
def test_norm_criterion_holds_on_samples(p, e, r):
    out = tame_norm_sweep(p, e, r, samples=100, seed=3)
    assert out["violations"] == 0 and out["hypothesis_met"] > 0


def test_level_sample_with_other_residues():
    rng = random.Random(0)
    ctx = make_tame_context(5, 3, 4)
    for _ in range(200):
        a = rng.randrange(1, 5)
        assert check_norm_level_sample(sample_near(ctx, a, 1, rng), a, 1).holds


def test_precision_guard():
    ctx = make_tame_context(5, 2, 2)
    with pytest.raises(errors.PrecisionTooLow):
        check_norm_sample(ctx.one, 2)


def test_sweep_is_deterministic():
    assert tame_norm_sweep(3, 2, 1, 50, seed=9) == tame_norm_sweep(3, 2, 1, 50, seed=9)
