#!/usr/bin/env python3
"""
Group ring Z[F_m] and Fox derivatives
"""

import random

import pytest

from algebra.free_words import FreeWord, RankMismatchError
from algebra.group_ring import GroupRingElement, fox_derivative, fox_jacobian_row
from algebra.laurent import LaurentPoly
from config import settings


def _random_word(rng, rank, length):
    return FreeWord.from_sequence(rank, [rng.choice((1, -1)) * rng.randint(1, rank) for _ in range(length)])


def test_fundamental_formula():
    """w - 1 = sum_k (dw/df_k)(f_k - 1)"""
    rng = random.Random(settings.RANDOM_SEED)
    for _ in range(settings.TEST_BATTERY_SIZE):
        w = _random_word(rng, 3, rng.randint(0, 8))
        one = GroupRingElement.one(3)
        total = GroupRingElement.zero(3)
        for k, d in enumerate(fox_jacobian_row(w), start=1):
            total = total + d * (GroupRingElement.of_word(FreeWord.generator(3, k)) - one)
        assert total == GroupRingElement.of_word(w) - one


def test_derivative_of_a_conjugate():
    f1, f2 = FreeWord.generator(2, 1), FreeWord.generator(2, 2)
    w = f1 * f2 * f1.inverse()
    expected = GroupRingElement.one(2) - GroupRingElement.of_word(w)
    assert fox_derivative(w, 1) == expected
    assert fox_derivative(w, 2) == GroupRingElement.of_word(f1)


def test_specialize_sends_every_generator_to_t():
    f1, f2 = FreeWord.generator(2, 1), FreeWord.generator(2, 2)
    x = GroupRingElement.one(2) - GroupRingElement.of_word(f1 * f2 * f1.inverse()) \
        + GroupRingElement.of_word(f2 * f2, 3)
    assert x.specialize() == LaurentPoly({0: 1, 1: -1, 2: 3})


def test_arithmetic_cancels_zero_coefficients():
    w = GroupRingElement.of_word(FreeWord.generator(2, 1))
    assert (w - w).is_zero()
    assert (w * 3).specialize() == LaurentPoly({1: 3})


def test_act_applies_a_homomorphism_to_every_word():
    f1, f2 = FreeWord.generator(2, 1), FreeWord.generator(2, 2)
    x = GroupRingElement.of_word(f1) + GroupRingElement.of_word(f1 * f2)
    swapped = x.act(lambda w: FreeWord(2, tuple((3 - g, e) for g, e in w.letters)))
    assert swapped == GroupRingElement.of_word(f2) + GroupRingElement.of_word(f2 * f1)


def test_rank_is_enforced():
    with pytest.raises(RankMismatchError):
        GroupRingElement(2, {FreeWord.generator(3, 1): 1})
