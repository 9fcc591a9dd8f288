#!/usr/bin/env python3
"""
The bimodule M over B_{3,3}, its rank-8 quotients and the derived R-matrices
"""

import random

import pytest

from algebra.laurent import LaurentPoly, random_laurent
from braids.braid_words import BraidWord
from config import settings
from invariants.yang_baxter import ybe_check
from representations.bimodule import (Q_BASIS, MElement, MalformedElementError, QElement,
                                      QuotientError, act_by_word, action_equations, basis_element,
                                      derive_R, derive_r_with_placement, induced_action,
                                      induced_matrices, jones_r, random_prequotient,
                                      reduce_grassman, reduce_jones, right_action,
                                      specialize_scalars)
from representations.burau import upsilon
from representations.tensor import (LISTED_TENSOR_ORDER, MASK_TENSOR_ORDER, TensorOperator,
                                    factors_in_order)

t = LaurentPoly({1: 1})

EQUATIONS = action_equations()


def test_there_are_sixteen_action_equations():
    assert len(EQUATIONS) == 16
    assert len({(mono, g) for _, mono, g, _ in EQUATIONS}) == 16


@pytest.mark.parametrize('label,mono,generator,expected', EQUATIONS, ids=[e[0] for e in EQUATIONS])
def test_action_equation(label, mono, generator, expected):
    assert right_action(basis_element(mono), generator) == expected


def test_action_respects_the_braid_relation():
    for mono in [(), (1,), (2, 1), (1, 3, 2)]:
        m = basis_element(mono)
        assert act_by_word(m, BraidWord(3, (1, 2, 1))) == act_by_word(m, BraidWord(3, (2, 1, 2)))


def test_inverse_generator_undoes_the_generator():
    for mono in [(1,), (2, 3), (1, 2, 3)]:
        m = basis_element(mono)
        assert right_action(right_action(m, 2), -2) == m


def test_malformed_elements():
    with pytest.raises(MalformedElementError):
        basis_element((6,))
    with pytest.raises(MalformedElementError):
        basis_element((1, 1, 1, 1))
    with pytest.raises(MalformedElementError):
        right_action(basis_element(()), 3)


def test_element_arithmetic():
    a = basis_element((1,))
    assert (a - a).is_zero()
    assert a + a == MElement.term((1,), coef=2)


def test_specialize_scalars():
    expected = right_action(basis_element((1,)), 1)
    assert specialize_scalars(expected) == {(1,): 1 - t, (2,): t}


def test_jones_reduction():
    assert reduce_jones({(2, 1): t}) == QElement.from_dict({3: LaurentPoly.constant(1)})
    assert reduce_jones({(3, 2, 1): LaurentPoly.constant(1)}) == QElement.from_dict({7: t ** -3})
    assert reduce_jones({(1, 1): t}) == QElement.from_dict({})


def test_grassman_reduction():
    assert reduce_grassman({(2, 1): LaurentPoly.constant(1)}) == QElement.from_dict({3: LaurentPoly.constant(-1)})
    assert reduce_grassman({(3, 1, 2): LaurentPoly.constant(1)}) == QElement.from_dict({7: LaurentPoly.constant(1)})


def test_quotient_rejects_indices_outside_the_basis():
    with pytest.raises(QuotientError):
        reduce_jones({(4,): LaurentPoly.constant(1)})


def test_induced_action_rows():
    assert induced_action((), 1).row() == [1, 0, 0, 0, 0, 0, 0, 0]
    assert induced_action((2,), 1).row() == [0, 1, 0, 0, 0, 0, 0, 0]


def test_induced_matrices_with_inverses():
    mats = induced_matrices('jones', with_inverses=True)
    assert mats[1] @ mats[-1] == TensorOperator.identity(3)
    assert mats[2] @ mats[-2] == TensorOperator.identity(3)


def test_unknown_reduction():
    with pytest.raises(ValueError):
        induced_matrices('homfly')


def test_derived_r_matrices():
    r, placement = derive_r_with_placement('jones')
    assert r == jones_r()
    assert placement in ('left', 'right')
    assert r.matrix[3, 3] == 1
    assert ybe_check(r)
    assert derive_R('grassman') == upsilon()


@pytest.mark.parametrize('g', [1, -1, 2, -2])
def test_inverse_generator_fixes_every_basis_monomial(g):
    for mono in Q_BASIS:
        m = basis_element(mono)
        assert act_by_word(m, BraidWord(3, (g, -g))) == m


@pytest.mark.parametrize('reduction', ['jones', 'grassman'])
def test_induced_matrices_satisfy_the_braid_relation(reduction):
    mats = induced_matrices(reduction)
    assert mats[1] @ mats[2] @ mats[1] == mats[2] @ mats[1] @ mats[2]


@pytest.mark.parametrize('reduction', ['jones', 'grassman'])
def test_only_the_mask_order_factors_the_quotient(reduction):
    mats = induced_matrices(reduction)
    assert factors_in_order(mats[1], mats[2], MASK_TENSOR_ORDER)
    assert not factors_in_order(mats[1], mats[2], LISTED_TENSOR_ORDER)


def test_jones_reduction_of_a_triple_descent():
    one = LaurentPoly.constant(1)
    assert reduce_jones({(2, 1): one}) == QElement.from_dict({3: t ** -1})
    assert reduce_jones({(1, 3, 2): one}) == QElement.from_dict({7: t ** -1})


@pytest.mark.parametrize('reduce', [reduce_jones, reduce_grassman])
def test_reductions_are_idempotent_and_linear(reduce):
    rng = random.Random(settings.RANDOM_SEED + 7)
    for _ in range(settings.TEST_BATTERY_SIZE):
        x, y = random_prequotient(rng), random_prequotient(rng)
        c = random_laurent(rng)
        assert reduce(reduce(x).monomials()) == reduce(x)
        merged = dict(x)
        for mono, p in y.items():
            merged[mono] = merged[mono] + p if mono in merged else p
        assert reduce(merged) == reduce(x) + reduce(y)
        assert reduce({mono: c * p for mono, p in x.items()}) == reduce(x).scale(c)


@pytest.mark.parametrize('reduce', [reduce_jones, reduce_grassman])
def test_rewriting_order_does_not_matter(reduce):
    rng = random.Random(settings.RANDOM_SEED + 8)
    for _ in range(settings.TEST_BATTERY_SIZE):
        x = random_prequotient(rng)
        assert reduce(x, rng=random.Random(rng.random())) == reduce(x)
