#!/usr/bin/env python3
"""
Integral group ring Z[F_m] and Fox calculus
"""

from typing import Callable, Dict, Iterable, Mapping, Tuple

from algebra.free_words import FreeWord, RankMismatchError
from algebra.laurent import LaurentPoly


class GroupRingElement:
    """Finite Z-combination of free words of one rank."""

    __slots__ = ('rank', 'coeffs')

    def __init__(self, rank: int, coeffs: Mapping[FreeWord, int] = None):
        self.rank = rank
        merged: Dict[FreeWord, int] = {}
        for word, c in (coeffs or {}).items():
            if word.rank != rank:
                raise RankMismatchError(f"word of F_{word.rank} in Z[F_{rank}]")
            merged[word] = merged.get(word, 0) + c
        self.coeffs: Dict[FreeWord, int] = {w: c for w, c in merged.items() if c != 0}

    @classmethod
    def zero(cls, rank: int) -> "GroupRingElement":
        return cls(rank)

    @classmethod
    def one(cls, rank: int) -> "GroupRingElement":
        return cls(rank, {FreeWord.identity(rank): 1})

    @classmethod
    def of_word(cls, word: FreeWord, coef: int = 1) -> "GroupRingElement":
        return cls(word.rank, {word: coef})

    def items(self) -> Iterable[Tuple[FreeWord, int]]:
        return self.coeffs.items()

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, 0) + c
        return GroupRingElement(self.rank, out)

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement(self.rank, {w: -c for w, c in self.coeffs.items()})

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        return self + (-other)

    def __mul__(self, other: "GroupRingElement") -> "GroupRingElement":
        if isinstance(other, int):
            return GroupRingElement(self.rank, {w: c * other for w, c in self.coeffs.items()})
        out: Dict[FreeWord, int] = {}
        for w1, c1 in self.coeffs.items():
            for w2, c2 in other.coeffs.items():
                w = w1 * w2
                out[w] = out.get(w, 0) + c1 * c2
        return GroupRingElement(self.rank, out)

    def act(self, substitution: Callable[[FreeWord], FreeWord], target_rank: int = None) -> "GroupRingElement":
        """Apply a group homomorphism to every word."""
        out: Dict[FreeWord, int] = {}
        rank = target_rank or self.rank
        for w, c in self.coeffs.items():
            image = substitution(w)
            rank = image.rank
            out[image] = out.get(image, 0) + c
        return GroupRingElement(rank, out)

    def specialize(self, var: str = 't') -> LaurentPoly:
        """f_j -> t for every generator."""
        return LaurentPoly(((w.exponent_sum(), c) for w, c in self.coeffs.items()), var)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.rank == other.rank and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.rank, frozenset(self.coeffs.items())))

    def to_json(self) -> dict:
        return {str(w): c for w, c in sorted(self.coeffs.items(), key=lambda kv: kv[0].letters)}

    def __str__(self) -> str:
        if not self.coeffs:
            return '0'
        return ' + '.join(f"{c}*({w})" if c != 1 else f"({w})" for w, c in self.coeffs.items())

    __repr__ = __str__


def fox_derivative(w: FreeWord, k: int) -> GroupRingElement:
    """Left Fox derivative d w / d f_k, so that w - 1 = sum_k (dw/df_k)(f_k - 1)."""
    out: Dict[FreeWord, int] = {}
    prefix = FreeWord.identity(w.rank)
    for gen, step in w.syllables():
        letter = FreeWord.generator(w.rank, gen, step)
        if gen == k:
            if step > 0:
                out[prefix] = out.get(prefix, 0) + 1
            else:
                term = prefix * letter
                out[term] = out.get(term, 0) - 1
        prefix = prefix * letter
    return GroupRingElement(w.rank, out)


def fox_jacobian_row(w: FreeWord):
    """(dw/df_1, ..., dw/df_m)"""
    return [fox_derivative(w, k) for k in range(1, w.rank + 1)]
