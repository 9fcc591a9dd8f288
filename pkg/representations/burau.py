#!/usr/bin/env python3
"""
Braid-valued Burau representation and its classical specialization

The augmentation ideal of F_n is free on s_j = f_j - 1.  A braid alpha acts
from the right by  s_j alpha = alpha (psi(alpha)(f_j) - 1), so the matrix of
alpha is the pair (alpha, S) with S[j][k] the Fox derivative
d psi(alpha)(f_j) / d f_k, and
    (alpha, S)(beta, T) = (alpha beta, psi(beta)(S) T).
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from algebra.free_words import FreeWord
from algebra.group_ring import GroupRingElement, fox_jacobian_row
from algebra.laurent import (LaurentPoly, identity_matrix, laurent_matrix, matrix_product,
                             zero_matrix)
from braids.braid_words import BraidError, BraidWord, artin_action
from config import settings
from representations.tensor import MASK_TENSOR_ORDER, TensorOperator, factor_in_order

Body = Tuple[Tuple[GroupRingElement, ...], ...]

# Jones' exterior-algebra matrix, corner entry -t
UPSILON_ROWS = [[1, 0, 0, 0],
                [0, LaurentPoly({0: 1, 1: -1}), LaurentPoly({1: 1}), 0],
                [0, 1, 0, 0],
                [0, 0, 0, LaurentPoly({1: -1})]]


def upsilon() -> TensorOperator:
    return TensorOperator(UPSILON_ROWS)


def _identity_body(n: int) -> Body:
    one, zero = GroupRingElement.one(n), GroupRingElement.zero(n)
    return tuple(tuple(one if r == c else zero for c in range(n)) for r in range(n))


@dataclass(frozen=True)
class FactoredBurauMatrix:
    prefix: BraidWord
    body: Body

    @classmethod
    def identity(cls, n: int) -> "FactoredBurauMatrix":
        return cls(BraidWord(n), _identity_body(n))

    @property
    def strands(self) -> int:
        return self.prefix.strands

    def __mul__(self, other: "FactoredBurauMatrix") -> "FactoredBurauMatrix":
        if self.strands != other.strands:
            raise BraidError(f"B_{self.strands} vs B_{other.strands}")
        n = self.strands
        moved = [[entry.act(lambda w: artin_action(other.prefix, w), n) for entry in row]
                 for row in self.body]
        rows = []
        for r in range(n):
            row = []
            for c in range(n):
                acc = GroupRingElement.zero(n)
                for k in range(n):
                    if moved[r][k].is_zero() or other.body[k][c].is_zero():
                        continue
                    acc = acc + moved[r][k] * other.body[k][c]
                row.append(acc)
            rows.append(tuple(row))
        return FactoredBurauMatrix(self.prefix * other.prefix, tuple(rows))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FactoredBurauMatrix):
            return NotImplemented
        return self.prefix == other.prefix and self.body == other.body

    def __hash__(self):
        return hash((self.prefix, self.body))

    def is_identity(self) -> bool:
        return self == FactoredBurauMatrix.identity(self.strands)

    def to_json(self) -> dict:
        return {'prefix': str(self.prefix),
                'strands': self.strands,
                'body': [[entry.to_json() for entry in row] for row in self.body]}


def _check_generator(i: int, n: int):
    if i == 0 or abs(i) > n - 1:
        raise BraidError(f"generator {i} out of range for B_{n}")


def burau_braid_valued(i: int, n: int) -> FactoredBurauMatrix:
    _check_generator(i, n)
    g = abs(i) - 1
    fi = FreeWord.generator(n, g + 1)
    fj = FreeWord.generator(n, g + 2)
    one = GroupRingElement.one(n)
    zero = GroupRingElement.zero(n)
    # block [[1 - f_i f_(i+1) f_i^-1, f_i], [1, 0]]
    a = one - GroupRingElement.of_word(fi * fj * fi.inverse())
    if i > 0:
        block = [[a, GroupRingElement.of_word(fi)], [one, zero]]
        prefix = BraidWord(n, (i,))
    else:
        # explicit inverse block [[0, 1], [f_i^-1, -f_i^-1 a]], then moved by psi(tau_i^-1)
        fi_inv = GroupRingElement.of_word(fi.inverse())
        inverse_block = [[zero, one], [fi_inv, -(fi_inv * a)]]
        prefix = BraidWord(n, (i,))
        block = [[entry.act(lambda w: artin_action(prefix, w), n) for entry in row]
                 for row in inverse_block]
    rows = [list(r) for r in _identity_body(n)]
    for r in range(2):
        for c in range(2):
            rows[g + r][g + c] = block[r][c]
    return FactoredBurauMatrix(prefix, tuple(tuple(r) for r in rows))


def burau_of_word(b: BraidWord) -> FactoredBurauMatrix:
    result = FactoredBurauMatrix.identity(b.strands)
    for letter in b.letters:
        result = result * burau_braid_valued(letter, b.strands)
    return result


def burau_fox(b: BraidWord) -> FactoredBurauMatrix:
    """Rows are the Fox derivatives of psi(b)(f_j)."""
    n = b.strands
    rows = tuple(tuple(fox_jacobian_row(artin_action(b, FreeWord.generator(n, j))))
                 for j in range(1, n + 1))
    return FactoredBurauMatrix(b, rows)


def specialize(m: FactoredBurauMatrix, var: str = 't') -> np.ndarray:
    """tau_i -> 1, f_j -> t."""
    return laurent_matrix([[entry.specialize(var) for entry in row] for row in m.body], var)


# ---------------- classical Burau ----------------
def burau_generator_matrix(i: int, n: int, var: str = 't') -> np.ndarray:
    _check_generator(i, n)
    g = abs(i) - 1
    m = identity_matrix(n, var)
    t = LaurentPoly({1: 1}, var)
    if i > 0:
        block = [[1 - t, t], [1, 0]]
    else:
        block = [[0, 1], [t ** -1, 1 - t ** -1]]
    for r in range(2):
        for c in range(2):
            m[g + r, g + c] = LaurentPoly.coerce(block[r][c], var)
    return m


def classical_burau(b: BraidWord, var: str = 't') -> np.ndarray:
    m = identity_matrix(b.strands, var)
    for letter in b.letters:
        m = matrix_product(m, burau_generator_matrix(letter, b.strands, var))
    return m


def reduce_matrix(m: np.ndarray, var: str = 't') -> np.ndarray:
    """Restrict a Burau matrix to the span of d_i = e_i - e_(i+1).

    Rows are change-of-basis coordinates in (d_1, ..., d_(n-1), e_n); the
    row-sum functional is invariant, so the d-span is invariant too.
    """
    n = m.shape[0]
    if n <= 1:
        return zero_matrix(0, 0, var)
    p = laurent_matrix([[1 if c == r else (-1 if c == r + 1 else 0) for c in range(n)]
                        if r < n - 1 else [1 if c == n - 1 else 0 for c in range(n)]
                        for r in range(n)], var)
    p_inv = laurent_matrix([[1 if c >= r else 0 for c in range(n)] for r in range(n)], var)
    full = matrix_product(matrix_product(p, m), p_inv)
    return laurent_matrix(full[:n - 1, :n - 1].tolist(), var)


def reduced_burau(b: BraidWord, var: str = 't') -> np.ndarray:
    return reduce_matrix(classical_burau(b, var), var)


# ---------------- exterior algebra ----------------
def _subset(mask: int, size: int) -> List[int]:
    return [i for i in range(size) if mask >> i & 1]


def _det(rows: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Laplace expansion; only used on blocks of size <= 3."""
    k = len(rows)
    if k == 0:
        return LaurentPoly.constant(1)
    if k == 1:
        return LaurentPoly.coerce(rows[0][0])
    total = LaurentPoly.constant(0)
    for c in range(k):
        minor = [row[:c] + row[c + 1:] for row in rows[1:]]
        term = LaurentPoly.coerce(rows[0][c]) * _det(minor)
        total = total + term if c % 2 == 0 else total - term
    return total


def exterior_extension(rho: np.ndarray) -> np.ndarray:
    """Action of rho on Lambda(R^3) in the basis
    (1, v1, v2, v1^v2, v3, v1^v3, v2^v3, v1^v2^v3): bit i of the index marks v_(i+1).
    """
    if rho.shape != (3, 3):
        raise ValueError(f"exterior extension expects a 3x3 matrix, got {rho.shape}")
    rows = rho.tolist()
    out = zero_matrix(8, 8)
    for source in range(8):
        s = _subset(source, 3)
        for target in range(8):
            t = _subset(target, 3)
            if len(s) != len(t):
                continue
            out[source, target] = _det([[rows[r][c] for c in t] for r in s])
    return out


def exterior_generators() -> List[TensorOperator]:
    """sigma_1, sigma_2 on Lambda(R^3) in the mask basis."""
    return [TensorOperator(exterior_extension(specialize(burau_braid_valued(i, 3)))) for i in (1, 2)]


def derive_upsilon_with_placement():
    """(Upsilon, placement of Upsilon inside sigma_1) from the exterior extension of Burau."""
    sigma = exterior_generators()
    x, placement = factor_in_order(sigma[0], sigma[1], MASK_TENSOR_ORDER)
    if settings.VERBOSE:
        print(f"Upsilon factors with sigma_1 = {'X (x) 1' if placement == 'left' else '1 (x) X'}")
    return x, placement


def derive_upsilon() -> TensorOperator:
    return derive_upsilon_with_placement()[0]
