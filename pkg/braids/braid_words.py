#!/usr/bin/env python3
"""
Braid words in B_n and Artin's action on the free group F_n

Automorphisms act from the right: the word b_1 b_2 ... acts on F_n by
applying psi(b_1) first, then psi(b_2), and so on.  psi is faithful, so the
tuple (psi(b)(f_1), ..., psi(b)(f_n)) is a canonical key for the group
element and braid equality is decided by comparing these tuples.
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import List, Sequence, Tuple

from algebra.free_words import FreeWord, RankMismatchError, apply_endomorphism


class BraidError(ValueError):
    """Malformed braid word or generator index out of range."""


class BraidParseError(BraidError):
    pass


class NotAKnotError(BraidError):
    """The closure has more than one component."""


@lru_cache(maxsize=None)
def generator_images(letter: int, rank: int) -> Tuple[FreeWord, ...]:
    """Images of f_1..f_rank under psi(tau_|letter|^sign)."""
    i = abs(letter)
    if not 1 <= i < rank:
        raise BraidError(f"generator tau_{i} does not act on F_{rank}")
    images = [FreeWord.generator(rank, j) for j in range(1, rank + 1)]
    fi, fj = FreeWord.generator(rank, i), FreeWord.generator(rank, i + 1)
    if letter > 0:
        # f_i -> f_i f_(i+1) f_i^-1, f_(i+1) -> f_i
        images[i - 1] = fi * fj * fi.inverse()
        images[i] = fi
    else:
        # f_i -> f_(i+1), f_(i+1) -> f_(i+1)^-1 f_i f_(i+1)
        images[i - 1] = fj
        images[i] = fj.inverse() * fi * fj
    return tuple(images)


@dataclass(frozen=True, eq=False)
class BraidWord:
    strands: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise BraidError(f"a braid needs at least one strand, got {self.strands}")
        object.__setattr__(self, 'letters', tuple(int(x) for x in self.letters))
        for x in self.letters:
            if x == 0:
                raise BraidError("zero is not a generator")
            if abs(x) > self.strands - 1:
                raise BraidError(f"generator {x} out of range for B_{self.strands}")

    @classmethod
    def identity(cls, strands: int) -> "BraidWord":
        return cls(strands)

    # ----- word operations -----
    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.strands != other.strands:
            raise BraidError(f"B_{self.strands} vs B_{other.strands}")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def exponent_sum(self) -> int:
        """Writhe of the closed-braid diagram."""
        return sum(1 if x > 0 else -1 for x in self.letters)

    def mirror(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-x for x in self.letters))

    def conjugate(self, by: "BraidWord") -> "BraidWord":
        """by * self * by^-1"""
        return by * self * by.inverse()

    def embed(self, strands: int) -> "BraidWord":
        if strands < self.strands:
            raise BraidError(f"cannot embed B_{self.strands} into B_{strands}")
        return BraidWord(strands, self.letters)

    def stabilize(self, sign: int = 1) -> "BraidWord":
        """Markov stabilization: b * tau_n^(+-1) in B_(n+1)."""
        n = self.strands
        return BraidWord(n + 1, self.letters + ((n if sign > 0 else -n),))

    # ----- group equality -----
    @cached_property
    def signature(self) -> Tuple[FreeWord, ...]:
        return action_signature(self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BraidWord):
            return NotImplemented
        return braid_equal(self, other)

    def __hash__(self) -> int:
        return hash((self.strands, self.signature))

    # ----- closure -----
    def closure_permutation(self) -> List[int]:
        """perm[p] = position (0-based) at the top of the strand starting at p."""
        at_position = list(range(self.strands))
        for x in self.letters:
            i = abs(x) - 1
            at_position[i], at_position[i + 1] = at_position[i + 1], at_position[i]
        perm = [0] * self.strands
        for pos, strand in enumerate(at_position):
            perm[strand] = pos
        return perm

    def component_count(self) -> int:
        perm, seen, cycles = self.closure_permutation(), set(), 0
        for start in range(self.strands):
            if start in seen:
                continue
            cycles += 1
            p = start
            while p not in seen:
                seen.add(p)
                p = perm[p]
        return cycles

    def is_knot(self) -> bool:
        return self.component_count() == 1

    def __str__(self) -> str:
        return format_braid(self)

    def __repr__(self) -> str:
        return f"BraidWord({self.strands}, '{format_braid(self)}')"


def artin_action(b: BraidWord, w: FreeWord) -> FreeWord:
    """psi(b)(w) for w in F_n, n = b.strands."""
    if w.rank != b.strands:
        raise RankMismatchError(f"B_{b.strands} acts on F_{b.strands}, got a word in F_{w.rank}")
    return act_on_larger(b, w)


def act_on_larger(b: BraidWord, w: FreeWord) -> FreeWord:
    """psi(b)(w) for w in F_m, m >= n: B_n moves the first n generators and fixes the rest."""
    if w.rank < b.strands:
        raise RankMismatchError(f"B_{b.strands} does not act on F_{w.rank}")
    for letter in b.letters:
        w = apply_endomorphism(generator_images(letter, w.rank), w)
    return w


def action_signature(b: BraidWord) -> Tuple[FreeWord, ...]:
    n = b.strands
    images = [FreeWord.generator(n, j) for j in range(1, n + 1)]
    for letter in b.letters:
        table = generator_images(letter, n)
        images = [apply_endomorphism(table, w) for w in images]
    return tuple(images)


def braid_equal(a: BraidWord, b: BraidWord) -> bool:
    if a.strands != b.strands:
        raise BraidError(f"comparing B_{a.strands} with B_{b.strands}")
    if a.letters == b.letters:
        return True
    return a.signature == b.signature


def embed_generator(i: int, n: int) -> BraidWord:
    """tau_i^(n) -> tau_i^(n+1)"""
    if not 1 <= i <= n - 1:
        raise BraidError(f"tau_{i} is not a generator of B_{n}")
    return BraidWord(n + 1, (i,))


def artin_relations(n: int) -> List[Tuple[BraidWord, BraidWord]]:
    """Defining relation pairs of B_n."""
    pairs = []
    for i in range(1, n - 1):
        pairs.append((BraidWord(n, (i, i + 1, i)), BraidWord(n, (i + 1, i, i + 1))))
    for i in range(1, n):
        for j in range(i + 2, n):
            pairs.append((BraidWord(n, (i, j)), BraidWord(n, (j, i))))
    return pairs


# ---------------- text form ----------------
def parse_braid(text: str, strands: int) -> BraidWord:
    """Whitespace-separated nonzero integers; a minus sign means the inverse generator."""
    letters = []
    for token in (text or '').replace(',', ' ').split():
        try:
            value = int(token)
        except ValueError:
            raise BraidParseError(f"malformed token '{token}'")
        if value == 0:
            raise BraidParseError("zero is not a generator")
        if abs(value) >= strands:
            raise BraidParseError(f"generator {value} needs more than {strands} strands")
        letters.append(value)
    return BraidWord(strands, tuple(letters))


def format_braid(b: BraidWord) -> str:
    return ' '.join(str(x) for x in b.letters)


def random_braid(rng, strands: int, length: int) -> BraidWord:
    if strands < 2:
        return BraidWord(strands)
    return BraidWord(strands, tuple(rng.choice((1, -1)) * rng.randint(1, strands - 1)
                                    for _ in range(length)))
