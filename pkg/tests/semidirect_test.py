#!/usr/bin/env python3
"""
Iterated semidirect products B_{n,j}
"""

import random

import pytest

from algebra.free_words import FreeWord, ad, commutator
from braids.braid_words import BraidWord, artin_action
from braids.semidirect import (SemidirectElement, SemidirectShapeError, act_on_level, level_rank,
                               pivot_index, pure_braid_action, pure_braid_word, random_semidirect)
from config import settings


def test_level_ranks():
    assert [level_rank(3, l) for l in (1, 2, 3)] == [3, 4, 5]
    assert pivot_index(3, 1) == 4


def test_pure_braid_word_shape():
    assert pure_braid_word(1, 3, 3).letters == (2, 1, 1, -2)
    assert pure_braid_word(2, 3, 4).letters == (2, 2)


@pytest.mark.parametrize('n', [2, 3])
def test_action_formula_matches_the_pure_braid(n):
    """f_i^(j) acts on F^(l) as the pure braid A_{i, n+j} does through Artin's action."""
    for l in range(2, 4):
        for j in range(1, l):
            rank = level_rank(n, l)
            for i in range(1, level_rank(n, j) + 1):
                a = pure_braid_word(i, pivot_index(n, j), rank)
                for eps, braid in ((1, a), (-1, a.inverse())):
                    for k in range(1, rank + 1):
                        expected = artin_action(braid, FreeWord.generator(rank, k))
                        assert pure_braid_action(i, j, eps, k, l, n) == expected


def test_first_level_pivots_on_the_new_strand():
    """In B_{3,2} the generators of F^(1) = F_3 pivot on f_4, the strand level 1 adds."""
    f = [None] + [FreeWord.generator(4, k) for k in range(1, 5)]
    assert pure_braid_action(1, 1, 1, 1, 2, 3) == ad(f[1] * f[4], f[1])
    assert pure_braid_action(1, 1, 1, 1, 2, 3) != ad(f[1] * f[3], f[1])
    assert pure_braid_action(1, 1, 1, 4, 2, 3) == ad(f[1] * f[4], f[4])
    assert pure_braid_action(1, 1, 1, 4, 2, 3) != f[4]
    assert pure_braid_action(1, 1, 1, 2, 2, 3) == ad(commutator(f[4], f[1]) ** -1, f[2])
    assert pure_braid_action(1, 1, 1, 3, 2, 3) == ad(commutator(f[4], f[1]) ** -1, f[3])


def test_action_rejects_bad_levels():
    with pytest.raises(SemidirectShapeError):
        pure_braid_action(1, 2, 1, 1, 2, 3)
    with pytest.raises(SemidirectShapeError):
        pure_braid_action(4, 1, 1, 1, 2, 3)


def test_product_is_a_homomorphism_into_the_braid_group():
    rng = random.Random(settings.RANDOM_SEED)
    for _ in range(settings.TEST_BATTERY_SIZE // 2):
        x = random_semidirect(rng, 2, 2, 2)
        y = random_semidirect(rng, 2, 2, 2)
        assert (x * y).to_braid() == x.to_braid() * y.to_braid()


def test_inverse():
    rng = random.Random(settings.RANDOM_SEED + 1)
    for _ in range(settings.TEST_BATTERY_SIZE // 2):
        x = random_semidirect(rng, 3, 2, 3)
        assert (x * x.inverse()).is_identity()
        assert (x.inverse() * x).is_identity()


def test_associativity():
    rng = random.Random(settings.RANDOM_SEED + 2)
    for _ in range(settings.TEST_BATTERY_SIZE):
        x, y, z = (random_semidirect(rng, 3, 3, 2) for _ in range(3))
        assert (x * y) * z == x * (y * z)


def test_braid_moves_lower_levels():
    """f_1 tau_1 = tau_1 psi(tau_1)(f_1) in combed form."""
    tau = SemidirectElement.of_braid(BraidWord(2, (1,)), 1)
    f1 = SemidirectElement.of_level(2, 1, 1, FreeWord.generator(2, 1))
    product = f1 * tau
    assert product.braid.letters == (1,)
    assert product.free_parts[0] == artin_action(BraidWord(2, (1,)), FreeWord.generator(2, 1))


def test_act_on_level_matches_conjugation_in_the_braid_group():
    rng = random.Random(settings.RANDOM_SEED + 3)
    n = 2
    for _ in range(5):
        g = random_semidirect(rng, n, 1, 2)
        x = FreeWord.from_sequence(level_rank(n, 2), [rng.choice((1, -1)) * rng.randint(1, 3) for _ in range(3)])
        # x . g  ==  g^-1 x g  inside B_{n,2}
        g2 = SemidirectElement(g.braid, g.free_parts + (FreeWord.identity(level_rank(n, 2)),))
        lifted = SemidirectElement.of_level(n, 2, 2, x)
        moved = SemidirectElement.of_level(n, 2, 2, act_on_level(g, x, 2))
        assert g2.inverse() * lifted * g2 == moved


def test_shape_errors():
    with pytest.raises(SemidirectShapeError):
        SemidirectElement(BraidWord(2), (FreeWord.identity(3),))
    with pytest.raises(SemidirectShapeError):
        SemidirectElement.identity(2, 1) * SemidirectElement.identity(2, 2)
    with pytest.raises(SemidirectShapeError):
        act_on_level(SemidirectElement.identity(2, 2), FreeWord.identity(3), 2)
