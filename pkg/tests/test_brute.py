import numpy as np
import pytest

from kummerlab import errors
from kummerlab.brute import BruteForceModel, brute_force_model, residue_pth_powers_check
from kummerlab.classify import is_primaire, is_primar
from kummerlab.cyclo import make_context


@pytest.mark.parametrize("p, m, order", [(3, 4, 54), (5, 6, 12500), (5, 1, 4)])
def test_group_order(p, m, order):
    assert brute_force_model(p, m).order == order


def test_budget():
    with pytest.raises(errors.TooLarge):
        BruteForceModel(7, 8)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_pth_powers_mod_p(p):
    same_set, formula_ok, count = residue_pth_powers_check(p)
    assert same_set and formula_ok and count == p - 1


@pytest.mark.parametrize("p", [3, 5])
def test_filtration_image_dims(p):
    model = BruteForceModel(p, p + 1)
    dims = [model.class_image_dim(model.in_filtration(n)) for n in range(1, p + 2)]
    assert dims == list(range(p, -1, -1))


def test_primar_image_dim_at_5():
    model = BruteForceModel(5, 6)
    assert model.class_image_dim(model.is_primar()) == 3


def test_norms_of_units_are_units():
    model = BruteForceModel(3, 4)
    assert np.all(model.norms() % 3 != 0)


@pytest.mark.parametrize("p, m", [(3, 4), (5, 6)])
def test_predicates_match_fast_path(p, m):
    ctx = make_context(p, 4)
    model = BruteForceModel(p, m)
    primaire, primar = model.is_primaire(), model.is_primar()
    step = max(1, model.order // 500)
    for i in range(0, model.order, step):
        x = ctx.elem([int(c) for c in model.elements[i]])
        assert is_primaire(x)[0] == bool(primaire[i])
        assert is_primar(x)[0] == bool(primar[i])


def test_primar_equals_primaire_at_3():
    model = BruteForceModel(3, 4)
    assert np.array_equal(model.is_primar(), model.is_primaire())
