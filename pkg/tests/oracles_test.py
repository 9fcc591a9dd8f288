#!/usr/bin/env python3
"""
Brute-force bracket and Fox-calculus oracles
"""

import random

import pytest

from algebra.laurent import LaurentPoly
from braids.braid_words import BraidWord, NotAKnotError, random_braid
from config import settings
from invariants.oracles import (CrossingBudgetError, OracleError, PlanarClosure, bracket_jones,
                                fox_alexander, fox_alexander_all_columns, jones_in_bracket_variable,
                                kauffman_bracket)
from invariants.yang_baxter import alexander, jones

TREFOIL = BraidWord(2, (1, 1, 1))
FIGURE_EIGHT = BraidWord(3, (1, -2, 1, -2))


def A(terms):
    return LaurentPoly(terms, 'A')


def test_bracket_small_diagrams():
    assert kauffman_bracket(PlanarClosure.from_braid(BraidWord(1))) == 1
    assert kauffman_bracket(PlanarClosure.from_braid(BraidWord(2, (1,)))) == A({3: -1})
    assert kauffman_bracket(PlanarClosure.from_braid(BraidWord(2, (-1,)))) == A({-3: -1})
    # two unlinked circles
    assert kauffman_bracket(PlanarClosure.from_braid(BraidWord(2))) == A({2: -1, -2: -1})


def test_bracket_of_the_trefoil():
    d = PlanarClosure.from_braid(TREFOIL)
    assert d.writhe == 3
    assert kauffman_bracket(d) == A({5: -1, -3: -1, -7: 1})
    assert bracket_jones(TREFOIL) == A({-4: 1, -12: 1, -16: -1})


def test_bracket_of_the_mirror_inverts_a():
    rng = random.Random(settings.RANDOM_SEED)
    for _ in range(5):
        b = random_braid(rng, 3, rng.randint(1, 7))
        original = kauffman_bracket(PlanarClosure.from_braid(b))
        mirrored = kauffman_bracket(PlanarClosure.from_braid(b.mirror()))
        assert mirrored == original.substitute_power(-1)


def test_normalized_bracket_survives_stabilization():
    rng = random.Random(settings.RANDOM_SEED + 1)
    for _ in range(settings.TEST_BATTERY_SIZE // 2):
        b = random_braid(rng, rng.randint(2, 3), rng.randint(0, 7))
        assert bracket_jones(b.stabilize(rng.choice((1, -1)))) == bracket_jones(b)


def test_crossing_budget():
    with pytest.raises(CrossingBudgetError):
        kauffman_bracket(PlanarClosure.from_braid(TREFOIL), limit=2)


def test_jones_in_bracket_variable():
    t = LaurentPoly({1: 1})
    assert jones_in_bracket_variable(1 + t) == A({0: 1, -4: 1})
    assert jones_in_bracket_variable(LaurentPoly({1: -1, 5: -1}, 's')) == A({-2: -1, -10: -1})


@pytest.mark.parametrize('braid', [
    TREFOIL, TREFOIL.mirror(), FIGURE_EIGHT, BraidWord(2, (1, 1)), BraidWord(3, (1, 1, 2, 2)),
    BraidWord(3, (1, 2, 1, 2, 1, 2)),
])
def test_bracket_matches_the_jones_pipeline(braid):
    assert jones_in_bracket_variable(jones(braid)) == bracket_jones(braid)


def test_wirtinger_presentation_of_the_trefoil():
    generators, relations = PlanarClosure.from_braid(TREFOIL).wirtinger()
    assert generators == 3
    assert len(relations) == 3
    assert {r.sign for r in relations} == {1}


def test_knots_have_one_arc_per_crossing():
    rng = random.Random(settings.RANDOM_SEED + 2)
    for _ in range(settings.TEST_BATTERY_SIZE):
        b = random_braid(rng, rng.randint(2, 4), rng.randint(1, 8))
        if b.is_knot():
            generators, _ = PlanarClosure.from_braid(b).wirtinger()
            assert generators == len(b)


@pytest.mark.parametrize('braid,expected', [
    (BraidWord(1), LaurentPoly.constant(1)),
    (BraidWord(2, (-1,)), LaurentPoly.constant(1)),
    (TREFOIL, LaurentPoly({0: 1, 1: -1, 2: 1})),
    (FIGURE_EIGHT, LaurentPoly({0: 1, 1: -3, 2: 1})),
])
def test_fox_alexander(braid, expected):
    assert fox_alexander(braid) == expected


def test_fox_alexander_does_not_depend_on_the_deleted_column():
    for b in (TREFOIL, FIGURE_EIGHT, BraidWord(3, (1, 1, 1, 2, -1, 2))):
        values = fox_alexander_all_columns(b)
        assert all(v == values[0] for v in values)


def test_fox_matches_burau():
    rng = random.Random(settings.RANDOM_SEED + 3)
    checked = 0
    while checked < settings.TEST_BATTERY_SIZE // 2:
        b = random_braid(rng, rng.randint(2, 4), rng.randint(1, 8))
        if not b.is_knot():
            continue
        assert fox_alexander(b) == alexander(b)
        checked += 1


def test_fox_oracle_errors():
    with pytest.raises(NotAKnotError):
        fox_alexander(BraidWord(2, (1, 1)))
    with pytest.raises(OracleError):
        fox_alexander(TREFOIL, column=7)
