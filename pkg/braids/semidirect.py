#!/usr/bin/env python3
"""
Semidirect products B_n F_n and the iterated groups
B_{n,j} = B_n x| F^(1) x| ... x| F^(j),   F^(l) = F_(n+l-1)

Elements are stored combed: a braid prefix, then one free word per level.
Level l is the free group of pure braids that wrap the strand n+l around
strands 1..n+l-1, so B_{n,j} sits inside B_(n+j) and every level below l
acts on F^(l) through Artin's action of B_(n+l-1).
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

from algebra.free_words import FreeWord, ad, apply_endomorphism, commutator
from braids.braid_words import BraidError, BraidWord, act_on_larger, random_braid


class SemidirectShapeError(ValueError):
    """Operands live in different groups B_{n,j}."""


def level_rank(n: int, level: int) -> int:
    return n + level - 1


def pivot_index(n: int, level: int) -> int:
    """Index, inside any higher level, of the strand added at `level`."""
    return n + level


def _check_level_indices(n: int, i: int, j: int, k: int, l: int):
    if not 1 <= j < l:
        raise SemidirectShapeError(f"level {j} does not act on level {l}")
    if not 1 <= i <= level_rank(n, j):
        raise SemidirectShapeError(f"f_{i} is not a generator of F^({j}) = F_{level_rank(n, j)}")
    if not 1 <= k <= level_rank(n, l):
        raise SemidirectShapeError(f"f_{k} is not a generator of F^({l}) = F_{level_rank(n, l)}")


def pure_braid_action(i: int, j: int, eps: int, k: int, l: int, n: int) -> FreeWord:
    """Image of f_k^(l) under f_i^(j)^eps.

    p is the pivot strand n+j:
      k < i or p < k     fixed
      k in {i, p}        Ad((f_i f_p)^eps)
      i < k < p          Ad([f_p^eps, f_i^eps]^-eps)
    """
    if eps not in (1, -1):
        raise SemidirectShapeError(f"exponent must be +-1, got {eps}")
    _check_level_indices(n, i, j, k, l)
    rank = level_rank(n, l)
    p = pivot_index(n, j)
    fk = FreeWord.generator(rank, k)
    if k < i or p < k:
        return fk
    fi, fp = FreeWord.generator(rank, i), FreeWord.generator(rank, p)
    if k in (i, p):
        return ad((fi * fp) ** eps, fk)
    return ad(commutator(fp ** eps, fi ** eps) ** -eps, fk)


@lru_cache(maxsize=None)
def pure_generator_images(i: int, j: int, eps: int, l: int, n: int) -> Tuple[FreeWord, ...]:
    return tuple(pure_braid_action(i, j, eps, k, l, n) for k in range(1, level_rank(n, l) + 1))


def pure_braid_word(i: int, p: int, strands: int) -> BraidWord:
    """A_{i,p} = t_{p-1} ... t_{i+1} t_i^2 t_{i+1}^-1 ... t_{p-1}^-1 in B_strands."""
    if not 1 <= i < p <= strands:
        raise BraidError(f"no pure generator A_{i},{p} in B_{strands}")
    up = tuple(range(p - 1, i, -1))
    return BraidWord(strands, up + (i, i) + tuple(-x for x in reversed(up)))


def act_by_level_word(h: FreeWord, level: int, x: FreeWord, target_level: int, n: int) -> FreeWord:
    """Right action of a level word h on x in F^(target_level), letters taken in order."""
    for gen, step in h.syllables():
        x = apply_endomorphism(pure_generator_images(gen, level, step, target_level, n), x)
    return x


@dataclass(frozen=True)
class SemidirectElement:
    braid: BraidWord
    free_parts: Tuple[FreeWord, ...] = ()

    def __post_init__(self):
        n = self.braid.strands
        object.__setattr__(self, 'free_parts', tuple(self.free_parts))
        for level, h in enumerate(self.free_parts, start=1):
            if h.rank != level_rank(n, level):
                raise SemidirectShapeError(
                    f"level {level} part must live in F_{level_rank(n, level)}, got F_{h.rank}")

    @classmethod
    def identity(cls, n: int, depth: int) -> "SemidirectElement":
        return cls(BraidWord(n), tuple(FreeWord.identity(level_rank(n, l)) for l in range(1, depth + 1)))

    @classmethod
    def of_braid(cls, braid: BraidWord, depth: int) -> "SemidirectElement":
        n = braid.strands
        return cls(braid, tuple(FreeWord.identity(level_rank(n, l)) for l in range(1, depth + 1)))

    @classmethod
    def of_level(cls, n: int, depth: int, level: int, word: FreeWord) -> "SemidirectElement":
        parts = [FreeWord.identity(level_rank(n, l)) for l in range(1, depth + 1)]
        parts[level - 1] = word
        return cls(BraidWord(n), tuple(parts))

    @property
    def strands(self) -> int:
        return self.braid.strands

    @property
    def depth(self) -> int:
        return len(self.free_parts)

    def is_identity(self) -> bool:
        return self.braid == BraidWord.identity(self.strands) and all(h.is_identity() for h in self.free_parts)

    def __mul__(self, other: "SemidirectElement") -> "SemidirectElement":
        return semidirect_multiply(self, other)

    def inverse(self) -> "SemidirectElement":
        """Inverse computed through the combed product: peel levels from the top down."""
        n, depth = self.strands, self.depth
        result = SemidirectElement.identity(n, depth)
        for level in range(depth, 0, -1):
            h = self.free_parts[level - 1]
            result = result * SemidirectElement.of_level(n, depth, level, h.inverse())
        return result * SemidirectElement.of_braid(self.braid.inverse(), depth)

    def to_braid(self) -> BraidWord:
        """Image in B_(n+depth): braid prefix, then pure braid words A_{i,n+l} per level."""
        n, depth = self.strands, self.depth
        total = n + depth
        letters = list(self.braid.letters)
        for level, h in enumerate(self.free_parts, start=1):
            for gen, step in h.syllables():
                a = pure_braid_word(gen, pivot_index(n, level), total)
                letters.extend(a.letters if step > 0 else a.inverse().letters)
        return BraidWord(total, tuple(letters))

    def __str__(self) -> str:
        parts = ' | '.join(str(h) for h in self.free_parts)
        return f"[{self.braid or 'e'} ; {parts}]"


def act_on_level(g: SemidirectElement, x: FreeWord, level: int) -> FreeWord:
    """x . g for x in F^(level), level > g.depth."""
    n = g.strands
    if level <= g.depth:
        raise SemidirectShapeError(f"B_{{{n},{g.depth}}} does not act on level {level}")
    if x.rank != level_rank(n, level):
        raise SemidirectShapeError(f"level {level} word must live in F_{level_rank(n, level)}")
    x = act_on_larger(g.braid, x)
    for lower, h in enumerate(g.free_parts, start=1):
        x = act_by_level_word(h, lower, x, level, n)
    return x


def semidirect_multiply(x: SemidirectElement, y: SemidirectElement) -> SemidirectElement:
    """(a h_1..h_j)(b k_1..k_j) in combed form.

    b moves left across every h_q (h_q -> psi(b)(h_q)); then each k_m moves
    left across the levels above m, acting on them.
    """
    if x.strands != y.strands or x.depth != y.depth:
        raise SemidirectShapeError(
            f"B_{{{x.strands},{x.depth}}} times B_{{{y.strands},{y.depth}}}")
    n = x.strands
    parts = [act_on_larger(y.braid, h) for h in x.free_parts]
    for m, k in enumerate(y.free_parts, start=1):
        for q in range(m + 1, x.depth + 1):
            parts[q - 1] = act_by_level_word(k, m, parts[q - 1], q, n)
        parts[m - 1] = parts[m - 1] * k
    return SemidirectElement(x.braid * y.braid, tuple(parts))


def random_semidirect(rng, n: int, depth: int, length: int) -> SemidirectElement:
    parts = []
    for level in range(1, depth + 1):
        rank = level_rank(n, level)
        parts.append(FreeWord.from_sequence(
            rank, [rng.choice((1, -1)) * rng.randint(1, rank) for _ in range(length)]))
    return SemidirectElement(random_braid(rng, n, length), tuple(parts))
