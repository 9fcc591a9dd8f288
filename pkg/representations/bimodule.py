#!/usr/bin/env python3
"""
The bimodule M over B_{3,3} and its rank-8 quotients Q

    M = Z[B_{3,3}] 1 + I^(3) + I^(3) I^(2) + I^(3) I^(2) I^(1)

Every element is kept in the normal form  sum  c * G * s_(i3)^(3) s_(i2)^(2) s_(i1)^(1)
with G a combed element of B_{3,3}: group elements that sit between slots are
pushed to the front, and the right action of tau_g is computed by pushing tau_g
leftwards through the slots from the lowest level up,

    s_i^(l) g = g (f_i^(l).g - 1) = g sum_k (d(f_i^(l).g)/df_k) s_k^(l).
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from algebra.free_words import FreeWord
from algebra.group_ring import fox_jacobian_row
from algebra.laurent import LaurentPoly, laurent_matrix, random_laurent
from braids.braid_words import BraidWord
from braids.semidirect import SemidirectElement, act_on_level, level_rank
from config import settings
from representations.tensor import MASK_TENSOR_ORDER, TensorOperator, factor_in_order

STRANDS = 3
DEPTH = 3

Monomial = Tuple[int, ...]          # basis indices at levels 3, 2, 1 (top first)
TermKey = Tuple[SemidirectElement, Monomial]

# Q basis: bit i of a mask marks s_(i+1); level is fixed by position in the monomial
Q_BASIS = ((), (1,), (2,), (1, 2), (3,), (1, 3), (2, 3), (1, 2, 3))
Q_BASIS_NAMES = ('1', 's1', 's2', 's1s2', 's3', 's1s3', 's2s3', 's1s2s3')

R_ROWS = [[1, 0, 0, 0],
          [0, LaurentPoly({0: 1, 1: -1}), LaurentPoly({1: 1}), 0],
          [0, 1, 0, 0],
          [0, 0, 0, 1]]


class MalformedElementError(ValueError):
    """Monomial indices or levels outside the bimodule."""


class QuotientError(ValueError):
    """A monomial has no image in the rank-8 quotient."""


def jones_r() -> TensorOperator:
    return TensorOperator(R_ROWS)


def slot_levels(degree: int) -> List[int]:
    return list(range(DEPTH, DEPTH - degree, -1))


def _check_monomial(mono: Monomial):
    if len(mono) > DEPTH:
        raise MalformedElementError(f"degree {len(mono)} exceeds {DEPTH}")
    for level, i in zip(slot_levels(len(mono)), mono):
        if not 1 <= i <= level_rank(STRANDS, level):
            raise MalformedElementError(f"s_{i} is not a basis element at level {level}")


class MElement:
    """Z-combination of (G, monomial) pairs."""

    __slots__ = ('terms',)

    def __init__(self, terms: Mapping[TermKey, int] = None):
        merged: Dict[TermKey, int] = {}
        for (g, mono), c in (terms or {}).items():
            _check_monomial(mono)
            if g.strands != STRANDS or g.depth != DEPTH:
                raise MalformedElementError("coefficients must lie in B_{3,3}")
            merged[(g, mono)] = merged.get((g, mono), 0) + c
        self.terms = {k: c for k, c in merged.items() if c != 0}

    @classmethod
    def term(cls, mono: Monomial, braid: Sequence[int] = (), parts: Mapping[int, FreeWord] = None,
             coef: int = 1) -> "MElement":
        """coef * tau(braid) * (level words) * s_mono."""
        words = []
        for level in range(1, DEPTH + 1):
            w = (parts or {}).get(level)
            words.append(w if w is not None else FreeWord.identity(level_rank(STRANDS, level)))
        g = SemidirectElement(BraidWord(STRANDS, tuple(braid)), tuple(words))
        return cls({(g, tuple(mono)): coef})

    def __add__(self, other: "MElement") -> "MElement":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return MElement(out)

    def __neg__(self) -> "MElement":
        return MElement({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "MElement") -> "MElement":
        return self + (-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MElement):
            return NotImplemented
        return self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        if not self.terms:
            return '0'
        parts = []
        for (g, mono), c in self.terms.items():
            slots = ' '.join(f"s{i}^({l})" for l, i in zip(slot_levels(len(mono)), mono)) or '1'
            parts.append(f"{c}*{g}*{slots}")
        return ' + '.join(parts)

    __repr__ = __str__


def basis_element(indices: Sequence[int]) -> MElement:
    """s_(i3)^(3) s_(i2)^(2) ... with identity coefficient."""
    return MElement.term(tuple(indices))


def _push_through(mono: Monomial, letter: int) -> List[Tuple[SemidirectElement, Monomial, int]]:
    """s_mono * tau_letter  ->  [(G, mono', coef)] with G s_mono' in normal form."""
    braid = BraidWord(STRANDS, (letter,))
    levels = slot_levels(len(mono))
    # partial results: (level words so far, monomial suffix, coefficient)
    partial: List[Tuple[Dict[int, FreeWord], Monomial, int]] = [({}, (), 1)]
    for level, index in reversed(list(zip(levels, mono))):
        grown = []
        for words, suffix, coef in partial:
            lower = tuple(words.get(l, FreeWord.identity(level_rank(STRANDS, l))) for l in range(1, level))
            g = SemidirectElement(braid, lower)
            image = act_on_level(g, FreeWord.generator(level_rank(STRANDS, level), index), level)
            for k, derivative in enumerate(fox_jacobian_row(image), start=1):
                for word, z in derivative.items():
                    grown.append(({**words, level: word}, (k,) + suffix, coef * z))
        partial = grown
    out = []
    for words, suffix, coef in partial:
        parts = tuple(words.get(l, FreeWord.identity(level_rank(STRANDS, l))) for l in range(1, DEPTH + 1))
        out.append((SemidirectElement(braid, parts), suffix, coef))
    return out


def right_action(m: MElement, letter: int) -> MElement:
    """m . tau_letter for letter in {+-1, +-2}."""
    if letter == 0 or abs(letter) > STRANDS - 1:
        raise MalformedElementError(f"tau_{letter} is not a generator of B_{STRANDS}")
    out: Dict[TermKey, int] = {}
    pushed: Dict[Monomial, list] = {}
    for (g, mono), c in m.terms.items():
        if mono not in pushed:
            pushed[mono] = _push_through(mono, letter)
        for h, mono2, z in pushed[mono]:
            key = (g * h, mono2)
            out[key] = out.get(key, 0) + c * z
    return MElement(out)


def act_by_word(m: MElement, b: BraidWord) -> MElement:
    for letter in b.letters:
        m = right_action(m, letter)
    return m


# ---------------- specialization and quotients ----------------
def specialize_scalars(m: MElement, var: str = 't') -> Dict[Monomial, LaurentPoly]:
    """tau_i -> 1, f_k^(j) -> t on the coefficients; slot monomials kept."""
    out: Dict[Monomial, LaurentPoly] = {}
    for (g, mono), c in m.terms.items():
        exp = sum(h.exponent_sum() for h in g.free_parts)
        out[mono] = out.get(mono, LaurentPoly({}, var)) + LaurentPoly({exp: c}, var)
    return {k: v for k, v in out.items() if not v.is_zero()}


@dataclass(frozen=True)
class QElement:
    """Z[t, t^-1]-combination of the eight Q basis elements, keyed by mask."""
    coeffs: Tuple[Tuple[int, LaurentPoly], ...]

    @classmethod
    def from_dict(cls, d: Mapping[int, LaurentPoly]) -> "QElement":
        return cls(tuple(sorted((m, p) for m, p in d.items() if not p.is_zero())))

    def row(self, var: str = 't') -> List[LaurentPoly]:
        d = dict(self.coeffs)
        return [d.get(mask, LaurentPoly({}, var)) for mask in range(8)]

    def monomials(self) -> Dict[Monomial, LaurentPoly]:
        """Increasing-index monomials, in the form the reductions accept."""
        return {Q_BASIS[m]: p for m, p in self.coeffs}

    def __add__(self, other: "QElement") -> "QElement":
        out = dict(self.coeffs)
        for m, p in other.coeffs:
            out[m] = out[m] + p if m in out else p
        return QElement.from_dict(out)

    def scale(self, c: LaurentPoly) -> "QElement":
        return QElement.from_dict({m: c * p for m, p in self.coeffs})

    def __str__(self) -> str:
        if not self.coeffs:
            return '0'
        return ' + '.join(f"({p})*{Q_BASIS_NAMES[m]}" for m, p in self.coeffs)


def _mask(mono: Monomial) -> int:
    mask = 0
    for i in mono:
        mask |= 1 << (i - 1)
    return mask


def _reduce(x: Mapping[Monomial, LaurentPoly], swap_factor: LaurentPoly, rng=None) -> QElement:
    """Leftmost descent first: repeated index -> 0, adjacent descent -> swap_factor * swapped.

    With `rng` the descent to swap is picked at random instead.
    """
    out: Dict[int, LaurentPoly] = {}
    for mono, coef in x.items():
        if any(not 1 <= i <= DEPTH for i in mono):
            raise QuotientError(f"monomial {mono} uses an index outside 1..{DEPTH}")
        mono = list(mono)
        if len(set(mono)) < len(mono):
            continue
        while True:
            descents = [p for p in range(len(mono) - 1) if mono[p] > mono[p + 1]]
            if not descents:
                break
            descent = rng.choice(descents) if rng is not None else descents[0]
            mono[descent], mono[descent + 1] = mono[descent + 1], mono[descent]
            coef = coef * swap_factor
        mask = _mask(mono)
        out[mask] = out.get(mask, LaurentPoly({}, coef.var)) + coef
    return QElement.from_dict(out)


def reduce_jones(x: Mapping[Monomial, LaurentPoly], var: str = 't', rng=None) -> QElement:
    return _reduce(x, LaurentPoly({-1: 1}, var), rng)


def reduce_grassman(x: Mapping[Monomial, LaurentPoly], var: str = 't', rng=None) -> QElement:
    return _reduce(x, LaurentPoly({0: -1}, var), rng)


def random_prequotient(rng, terms: int = 4) -> Dict[Monomial, LaurentPoly]:
    """Random combination of slot monomials (indices 1..3, repeats and descents allowed)."""
    out: Dict[Monomial, LaurentPoly] = {}
    for _ in range(terms):
        mono = tuple(rng.randint(1, DEPTH) for _ in range(rng.randint(0, DEPTH)))
        out[mono] = out.get(mono, LaurentPoly()) + random_laurent(rng)
    return out


REDUCTIONS = {'jones': reduce_jones, 'grassman': reduce_grassman}


def _reduction(name: str):
    try:
        return REDUCTIONS[name]
    except KeyError:
        raise ValueError(f"unknown reduction '{name}', expected one of {sorted(REDUCTIONS)}")


def induced_action(mono: Monomial, letter: int, reduction: str = 'jones') -> QElement:
    return _reduction(reduction)(specialize_scalars(right_action(basis_element(mono), letter)))


def induced_matrices(reduction: str = 'jones', with_inverses: bool = False) -> Dict[int, TensorOperator]:
    """8x8 matrices of tau_1, tau_2 on Q (rows = images of the mask basis).

    Inverse generators act through the matrix inverse when `with_inverses` is set.
    """
    out = {}
    for letter in (1, 2):
        rows = [induced_action(mono, letter, reduction).row() for mono in Q_BASIS]
        out[letter] = TensorOperator(laurent_matrix(rows))
        if with_inverses:
            out[-letter] = out[letter].inverse()
    return out


def derive_r_with_placement(reduction: str = 'jones'):
    mats = induced_matrices(reduction)
    x, placement = factor_in_order(mats[1], mats[2], MASK_TENSOR_ORDER)
    if settings.VERBOSE:
        print(f"{reduction} quotient: tau_1 acts as {'X (x) 1' if placement == 'left' else '1 (x) X'}")
    return x, placement


def derive_R(reduction: str = 'jones') -> TensorOperator:
    return derive_r_with_placement(reduction)[0]


# ---------------- regression vectors ----------------
def _a(i: int, level: int) -> List[Tuple[FreeWord, int]]:
    """a_i^(level) = 1 - f_i f_(i+1) f_i^-1 as (word, coef) pairs."""
    rank = level_rank(STRANDS, level)
    fi, fj = FreeWord.generator(rank, i), FreeWord.generator(rank, i + 1)
    return [(FreeWord.identity(rank), 1), (fi * fj * fi.inverse(), -1)]


def _f(i: int, level: int) -> List[Tuple[FreeWord, int]]:
    return [(FreeWord.generator(level_rank(STRANDS, level), i), 1)]


def _combo(letter: int, level: int, pieces: Iterable[Tuple[List[Tuple[FreeWord, int]], Monomial]]) -> MElement:
    """tau_letter * sum (coefficient at `level`) * s_mono."""
    out = MElement()
    for coefficient, mono in pieces:
        for word, c in coefficient:
            out = out + MElement.term(mono, (letter,), {level: word}, c)
    return out


def action_equations() -> List[Tuple[str, Monomial, int, MElement]]:
    """(label, basis monomial, generator, expected normal form) for the sixteen action equations."""
    t1, t2 = 1, 2
    eqs = [
        ('1 t1', (), t1, MElement.term((), (t1,))),
        ('s1 t1', (1,), t1, _combo(t1, 3, [(_a(1, 3), (1,)), (_f(1, 3), (2,))])),
        ('s2 t1', (2,), t1, MElement.term((1,), (t1,))),
        ('s3 t1', (3,), t1, MElement.term((3,), (t1,))),
        ('s1s2 t1', (1, 2), t1, _combo(t1, 3, [(_a(1, 3), (1, 1)), (_f(1, 3), (2, 1))])),
        ('s1s3 t1', (1, 3), t1, _combo(t1, 3, [(_a(1, 3), (1, 3)), (_f(1, 3), (2, 3))])),
        ('s2s3 t1', (2, 3), t1, MElement.term((1, 3), (t1,))),
        ('s1s2s3 t1', (1, 2, 3), t1, _combo(t1, 3, [(_a(1, 3), (1, 1, 3)), (_f(1, 3), (2, 1, 3))])),
        ('1 t2', (), t2, MElement.term((), (t2,))),
        ('s1 t2', (1,), t2, MElement.term((1,), (t2,))),
        ('s2 t2', (2,), t2, _combo(t2, 3, [(_a(2, 3), (2,)), (_f(2, 3), (3,))])),
        ('s3 t2', (3,), t2, MElement.term((2,), (t2,))),
        ('s1s2 t2', (1, 2), t2, _combo(t2, 2, [(_a(2, 2), (1, 2)), (_f(2, 2), (1, 3))])),
        ('s1s3 t2', (1, 3), t2, MElement.term((1, 2), (t2,))),
        ('s2s3 t2', (2, 3), t2, _combo(t2, 3, [(_a(2, 3), (2, 2)), (_f(2, 3), (3, 2))])),
        ('s1s2s3 t2', (1, 2, 3), t2, _combo(t2, 2, [(_a(2, 2), (1, 2, 2)), (_f(2, 2), (1, 3, 2))])),
    ]
    return eqs
