#!/usr/bin/env python3
"""
Free groups F_m = <f_1, ..., f_m>

Words are kept freely reduced with merged exponents, so two words are equal
as group elements exactly when their letter tuples are equal.
"""

import re
from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

Letter = Tuple[int, int]   # (generator index 1..m, nonzero exponent)

_TOKEN = re.compile(r'^f(\d+)(?:\^(-?\d+))?$')


class RankMismatchError(ValueError):
    """Two free words of different rank were combined."""


class MissingImageError(ValueError):
    """An endomorphism does not name an image for every generator."""


def _reduce(letters: Iterable[Letter]) -> Tuple[Letter, ...]:
    stack = []
    for gen, exp in letters:
        if exp == 0:
            continue
        if stack and stack[-1][0] == gen:
            merged = stack[-1][1] + exp
            stack.pop()
            if merged != 0:
                stack.append((gen, merged))
        else:
            stack.append((gen, exp))
    return tuple(stack)


@dataclass(frozen=True)
class FreeWord:
    rank: int
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError(f"free group rank must be positive, got {self.rank}")
        for gen, exp in self.letters:
            if not 1 <= gen <= self.rank:
                raise ValueError(f"generator f{gen} outside F_{self.rank}")
        object.__setattr__(self, 'letters', _reduce(self.letters))

    # ----- constructors -----
    @classmethod
    def identity(cls, rank: int) -> "FreeWord":
        return cls(rank)

    @classmethod
    def generator(cls, rank: int, index: int, exp: int = 1) -> "FreeWord":
        return cls(rank, ((index, exp),))

    @classmethod
    def from_sequence(cls, rank: int, seq: Sequence[int]) -> "FreeWord":
        """Signed index sequence, e.g. (1, 2, -1) = f1 f2 f1^-1."""
        return cls(rank, tuple((abs(i), 1 if i > 0 else -1) for i in seq))

    @classmethod
    def parse(cls, text: str, rank: int) -> "FreeWord":
        letters = []
        for token in text.split():
            m = _TOKEN.match(token)
            if not m:
                raise ValueError(f"malformed free-word token '{token}'")
            letters.append((int(m.group(1)), int(m.group(2) or 1)))
        return cls(rank, tuple(letters))

    # ----- group law -----
    def _check_rank(self, other: "FreeWord"):
        if self.rank != other.rank:
            raise RankMismatchError(f"F_{self.rank} vs F_{other.rank}")

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        self._check_rank(other)
        return FreeWord(self.rank, self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(self.rank, tuple((g, -e) for g, e in reversed(self.letters)))

    __invert__ = inverse

    def __pow__(self, n: int) -> "FreeWord":
        base = self if n >= 0 else self.inverse()
        result = FreeWord.identity(self.rank)
        for _ in range(abs(n)):
            result = result * base
        return result

    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self.letters)

    def exponent_sum(self) -> int:
        return sum(e for _, e in self.letters)

    def syllables(self):
        """Yield single letters (generator, +-1) in order."""
        for gen, exp in self.letters:
            step = 1 if exp > 0 else -1
            for _ in range(abs(exp)):
                yield gen, step

    def with_rank(self, rank: int) -> "FreeWord":
        """Same letters read in F_rank (rank must cover every generator)."""
        return FreeWord(rank, self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return '1'
        return ' '.join(f"f{g}" if e == 1 else f"f{g}^{e}" for g, e in self.letters)


def multiply(u: FreeWord, v: FreeWord) -> FreeWord:
    return u * v


def ad(x: FreeWord, y: FreeWord) -> FreeWord:
    """Ad(x)(y) = x y x^-1"""
    return x * y * x.inverse()


def commutator(x: FreeWord, y: FreeWord) -> FreeWord:
    """[x, y] = x y x^-1 y^-1"""
    return x * y * x.inverse() * y.inverse()


def apply_endomorphism(images: Sequence[FreeWord], w: FreeWord) -> FreeWord:
    """Substitute images[i-1]^(+-1) for every letter f_i^(+-1) of w."""
    if len(images) != w.rank:
        raise MissingImageError(f"need {w.rank} images, got {len(images)}")
    target = images[0].rank
    for image in images:
        if image.rank != target:
            raise RankMismatchError("endomorphism images have mixed ranks")
    inverses = {}
    letters = []
    for gen, step in w.syllables():
        if step > 0:
            letters.extend(images[gen - 1].letters)
        else:
            if gen not in inverses:
                inverses[gen] = images[gen - 1].inverse()
            letters.extend(inverses[gen].letters)
    return FreeWord(target, tuple(letters))


def standard_images(rank: int):
    """Identity endomorphism images (f_1, ..., f_rank)."""
    return [FreeWord.generator(rank, i) for i in range(1, rank + 1)]
