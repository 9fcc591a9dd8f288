#!/usr/bin/env python3
"""
Braid words: parsing, Artin action, equality and closures
"""

import random

import pytest

from algebra.free_words import FreeWord, RankMismatchError
from braids.braid_words import (BraidError, BraidParseError, BraidWord, act_on_larger, artin_action,
                                artin_relations, embed_generator, format_braid, parse_braid,
                                random_braid)
from config import settings


def test_parse_accepts_signed_tokens():
    assert parse_braid('1 1 1', 2) == BraidWord(2, (1, 1, 1))
    assert parse_braid('1 -2 1 -2', 3).letters == (1, -2, 1, -2)
    assert parse_braid('', 3).letters == ()
    assert parse_braid('1, -2', 3).letters == (1, -2)


@pytest.mark.parametrize('text,strands', [('0', 2), ('3 3', 2), ('1 x', 3), ('-3', 3)])
def test_parse_errors(text, strands):
    with pytest.raises(BraidParseError):
        parse_braid(text, strands)


def test_format_inverts_parse():
    rng = random.Random(settings.RANDOM_SEED)
    for _ in range(settings.TEST_BATTERY_SIZE):
        b = random_braid(rng, rng.randint(2, 5), rng.randint(0, 10))
        assert parse_braid(format_braid(b), b.strands).letters == b.letters


def test_generator_action():
    f = [FreeWord.generator(2, i) for i in (1, 2)]
    tau = BraidWord(2, (1,))
    assert artin_action(tau, f[0]) == f[0] * f[1] * f[0].inverse()
    assert artin_action(tau, f[1]) == f[0]
    assert artin_action(tau.inverse(), artin_action(tau, f[0])) == f[0]


def test_action_needs_matching_rank():
    with pytest.raises(RankMismatchError):
        artin_action(BraidWord(3, (1,)), FreeWord.generator(2, 1))
    with pytest.raises(RankMismatchError):
        artin_action(BraidWord(3, (1,)), FreeWord.generator(4, 4))


def test_action_on_a_larger_free_group():
    w = FreeWord.generator(4, 4)
    assert act_on_larger(BraidWord(3, (1, 2)), w) == w
    assert act_on_larger(BraidWord(3, (1,)), FreeWord.generator(4, 2)) == FreeWord.generator(4, 1)
    with pytest.raises(RankMismatchError):
        act_on_larger(BraidWord(3, (1,)), FreeWord.generator(2, 1))


@pytest.mark.parametrize('n', [3, 4, 5])
def test_artin_relations_hold(n):
    for lhs, rhs in artin_relations(n):
        assert lhs == rhs
        assert hash(lhs) == hash(rhs)


def test_distinct_braids_differ():
    assert BraidWord(3, (1,)) != BraidWord(3, (2,))
    assert BraidWord(3, (1, 2)) != BraidWord(3, (2, 1))
    assert BraidWord(2, (1, -1)) == BraidWord.identity(2)


def test_comparing_different_groups_raises():
    with pytest.raises(BraidError):
        BraidWord(2, (1,)) == BraidWord(3, (1,))


def test_letters_are_validated():
    with pytest.raises(BraidError):
        BraidWord(3, (3,))
    with pytest.raises(BraidError):
        BraidWord(0)


def test_closures():
    assert BraidWord(2, (1, 1, 1)).is_knot()
    assert BraidWord(2, (1, 1)).component_count() == 2
    assert BraidWord(3, (1, 2)).is_knot()
    assert BraidWord(3).component_count() == 3
    assert BraidWord(3, (1, -2, 1, -2)).closure_permutation() == [1, 2, 0]


def test_markov_moves_keep_the_component_count():
    rng = random.Random(settings.RANDOM_SEED)
    for _ in range(settings.TEST_BATTERY_SIZE):
        b = random_braid(rng, 3, rng.randint(0, 8))
        a = random_braid(rng, 3, 4)
        assert b.conjugate(a).component_count() == b.component_count()
        assert b.stabilize(1).component_count() == b.component_count()
        assert b.stabilize(-1).strands == 4


def test_mirror_and_exponent_sum():
    b = BraidWord(3, (1, -2, 2, 2))
    assert b.exponent_sum() == 2
    assert b.mirror().exponent_sum() == -2
    assert repr(b) == "BraidWord(3, '1 -2 2 2')"


def test_embed_generator_adds_a_strand():
    assert embed_generator(2, 3) == BraidWord(4, (2,))
    with pytest.raises(BraidError):
        embed_generator(3, 3)


@pytest.mark.parametrize('n', [2, 3, 4])
def test_action_of_a_product_is_the_composite(n):
    rng = random.Random(settings.RANDOM_SEED + n)
    for _ in range(settings.TEST_BATTERY_SIZE):
        a, b = random_braid(rng, n, 5), random_braid(rng, n, 5)
        w = FreeWord.from_sequence(n, [rng.choice([1, -1]) * rng.randint(1, n) for _ in range(6)])
        assert artin_action(a * b, w) == artin_action(b, artin_action(a, w))
