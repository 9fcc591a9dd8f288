#!/usr/bin/env python3
"""
Laurent polynomials over Z and matrices over Z[t, t^-1]
"""

import random

import pytest
import sympy as sp

from algebra.laurent import (LaurentError, LaurentPoly, NonExactDivisionError, add,
                             identity_matrix, laurent_matrix, matrices_equal, matrix_det,
                             matrix_inverse, matrix_product, mul, neg, normalize_up_to_units,
                             random_laurent)
from config import settings

t = LaurentPoly({1: 1})


def test_ring_operations():
    assert (1 - t) * (1 + t) == 1 - t ** 2
    assert t * t ** -1 == 1
    assert (t - t).is_zero()
    assert 2 * t + 1 == LaurentPoly({0: 1, 1: 2})


def test_negative_power_needs_a_unit():
    assert (-t) ** -2 == LaurentPoly({-2: 1})
    with pytest.raises(LaurentError):
        (1 + t) ** -1


def test_units():
    assert LaurentPoly({-3: -1}).is_unit()
    assert not (1 + t).is_unit()


def test_text_rendering():
    assert str(1 - t + t ** 2) == '1 - t + t^2'
    assert str(LaurentPoly({-1: 2, 2: -1}, 's')) == '2*s^-1 - s^2'
    assert str(LaurentPoly()) == '0'


def test_exact_division():
    assert (t ** 3 - 1).divide_exact(t - 1) == 1 + t + t ** 2
    assert LaurentPoly({-2: 1, 0: -1}).divide_exact(1 - t) == LaurentPoly({-2: 1, -1: 1})
    with pytest.raises(NonExactDivisionError):
        (t ** 2 + 1).divide_exact(t - 1)
    with pytest.raises(ZeroDivisionError):
        t.divide_exact(LaurentPoly())


def test_normalize_up_to_units():
    p = LaurentPoly({3: -1, 4: 1, 5: -1})
    assert p.normalize_up_to_units() == 1 - t + t ** 2
    assert p.equal_up_to_units(LaurentPoly({-1: 1, 0: -1, 1: 1}))
    with pytest.raises(LaurentError):
        LaurentPoly().normalize_up_to_units()


def test_substitute_power_and_evaluate():
    p = 1 - t + t ** 2
    assert p.substitute_power(-4, 'A') == LaurentPoly({0: 1, -4: -1, -8: 1}, 'A')
    assert p.evaluate(1) == 1
    assert p.evaluate(2) == 3


def test_variables_do_not_mix():
    s = LaurentPoly({1: 1}, 's')
    with pytest.raises(LaurentError):
        s + t
    assert s + 1 == LaurentPoly({0: 1, 1: 1}, 's')


def test_sympy_and_json_bridges():
    p = LaurentPoly({-2: 3, 1: -1})
    symbol = sp.Symbol('t')
    assert LaurentPoly.from_sympy(p.to_sympy(symbol), symbol) == p
    assert LaurentPoly.from_json(p.to_json()) == p
    assert p.to_json() == {'var': 't', 'terms': [{'exp': -2, 'coef': 3}, {'exp': 1, 'coef': -1}]}


def test_matrix_det_and_inverse():
    block = laurent_matrix([[1 - t, t], [1, 0]])
    assert matrix_det(block) == -t
    inverse = matrix_inverse(block)
    assert matrices_equal(inverse, laurent_matrix([[0, 1], [t ** -1, 1 - t ** -1]]))
    assert matrices_equal(matrix_product(block, inverse), identity_matrix(2))


def test_det_of_empty_matrix_is_one():
    assert matrix_det(identity_matrix(0)) == 1


def test_functional_ring_operations():
    p, q = 1 - t, t ** -1 + 2
    assert add(p, q) == 3 - t + t ** -1
    assert mul(p, q) == p * q
    assert add(p, neg(p)).is_zero()


def _wide(rng):
    return random_laurent(rng, max_terms=5, exp_range=10, coef_range=100)


def test_random_triples_obey_the_ring_laws():
    rng = random.Random(settings.RANDOM_SEED)
    for _ in range(settings.TEST_BATTERY_SIZE):
        p, q, r = _wide(rng), _wide(rng), _wide(rng)
        assert p * (q + r) == p * q + p * r
        assert p * q == q * p
        assert p + q == q + p
        assert (p * q) * r == p * (q * r)


def test_normal_form_ignores_units():
    rng = random.Random(settings.RANDOM_SEED + 1)
    for _ in range(settings.TEST_BATTERY_SIZE):
        p = _wide(rng)
        if p.is_zero():
            continue
        for k in range(-5, 6):
            for sign in (1, -1):
                assert normalize_up_to_units(sign * p.shift(k)) == normalize_up_to_units(p)
