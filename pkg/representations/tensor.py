#!/usr/bin/env python3
"""
Operators on V^(x)k, dim V = 2, over Z[t, t^-1]

Row-vector convention: row r of the matrix holds the coefficients of the
image of basis vector r, so operators compose left to right
(A.compose(B) applies A first).  Basis index of e_{a1} (x) ... (x) e_{ak}
is the binary number a1 a2 ... ak, first factor most significant, which is
exactly numpy's kron / reshape order.
"""

from typing import Optional, Sequence

import numpy as np

from algebra.laurent import (LaurentPoly, identity_matrix, laurent_matrix, matrices_equal,
                             matrix_inverse, matrix_map, matrix_product, matrix_to_json)


class TensorShapeError(ValueError):
    """Matrix size is not 2^k x 2^k, or arities do not match."""


class FactorizationError(ArithmeticError):
    """An operator on V^(x)3 is not of the form X (x) 1 or 1 (x) X."""


def _arity_of(size: int) -> int:
    k = size.bit_length() - 1
    if size < 1 or 1 << k != size:
        raise TensorShapeError(f"dimension {size} is not a power of 2")
    return k


class TensorOperator:
    __slots__ = ('arity', 'matrix', 'var')

    def __init__(self, matrix, var: str = 't'):
        matrix = matrix if isinstance(matrix, np.ndarray) else laurent_matrix(matrix, var)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise TensorShapeError(f"operator matrix must be square, got {matrix.shape}")
        self.arity = _arity_of(matrix.shape[0])
        self.matrix = matrix
        self.var = var

    @classmethod
    def identity(cls, arity: int, var: str = 't') -> "TensorOperator":
        return cls(identity_matrix(2 ** arity, var), var)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def compose(self, other: "TensorOperator") -> "TensorOperator":
        """self first, then other."""
        if self.arity != other.arity:
            raise TensorShapeError(f"arity {self.arity} vs {other.arity}")
        return TensorOperator(matrix_product(self.matrix, other.matrix), self.var)

    __matmul__ = compose

    def kron(self, other: "TensorOperator") -> "TensorOperator":
        return TensorOperator(laurent_matrix(np.kron(self.matrix, other.matrix).tolist(), self.var), self.var)

    def inverse(self) -> "TensorOperator":
        return TensorOperator(matrix_inverse(self.matrix, self.var), self.var)

    def trace(self) -> LaurentPoly:
        total = LaurentPoly({}, self.var)
        for i in range(self.dim):
            total = total + self.matrix[i, i]
        return total

    def weighted_trace(self, weights) -> LaurentPoly:
        """sum_i weights[i] * M[i, i]"""
        total = LaurentPoly({}, self.var)
        for i in range(self.dim):
            total = total + weights[i] * self.matrix[i, i]
        return total

    def partial_trace_last(self) -> "TensorOperator":
        """Trace over the last tensor factor."""
        if self.arity < 1:
            raise TensorShapeError("nothing to trace out")
        half = self.dim // 2
        rows = [[self.matrix[2 * a, 2 * b] + self.matrix[2 * a + 1, 2 * b + 1] for b in range(half)]
                for a in range(half)]
        return TensorOperator(laurent_matrix(rows, self.var), self.var)

    def substitute_power(self, k: int, var: Optional[str] = None) -> "TensorOperator":
        var = var or self.var
        return TensorOperator(matrix_map(self.matrix, lambda p: LaurentPoly.coerce(p).substitute_power(k, var)), var)

    def evaluate(self, value) -> np.ndarray:
        return matrix_map(self.matrix, lambda p: LaurentPoly.coerce(p).evaluate(value))

    def is_scalar(self) -> Optional[LaurentPoly]:
        """The scalar c if this operator is c * identity, else None."""
        c = self.matrix[0, 0]
        return c if matrices_equal(self.matrix, matrix_map(identity_matrix(self.dim, self.var), lambda p: p * c)) else None

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorOperator):
            return NotImplemented
        return matrices_equal(self.matrix, other.matrix)

    def __hash__(self):
        return hash(tuple(self.matrix.flat))

    def to_json(self) -> list:
        return matrix_to_json(self.matrix)

    def rows_text(self) -> list:
        return [[str(x) for x in row] for row in self.matrix.tolist()]

    def __repr__(self) -> str:
        return f"TensorOperator(arity={self.arity}, {self.rows_text()})"


def local_operator(x: TensorOperator, position: int, arity: int) -> TensorOperator:
    """1^(position-1) (x) X (x) 1^(arity-position-X.arity+1); position is 1-based."""
    left = position - 1
    right = arity - left - x.arity
    if left < 0 or right < 0:
        raise TensorShapeError(f"arity-{x.arity} operator does not fit at {position} in V^(x){arity}")
    out = TensorOperator.identity(left, x.var) if left else None
    out = x if out is None else out.kron(x)
    if right:
        out = out.kron(TensorOperator.identity(right, x.var))
    return out


def right_multiply_local(m: np.ndarray, x: TensorOperator, position: int, arity: int) -> np.ndarray:
    """m . (1 (x) .. X at `position` .. (x) 1) without building the 2^arity operator."""
    d = m.shape[0]
    lead = position - 1
    blocks = m.reshape((d,) + (2,) * arity)
    local = x.matrix.reshape((2,) * (2 * x.arity))
    axes = list(range(1 + lead, 1 + lead + x.arity))
    out = np.tensordot(blocks, local, axes=(axes, list(range(x.arity))))
    # tensordot appends the output legs; move them back into place
    out = np.moveaxis(out, list(range(out.ndim - x.arity, out.ndim)), axes)
    return out.reshape(d, 2 ** arity)


def factor_placement(sigma: TensorOperator, placement: str) -> TensorOperator:
    """Recover X from sigma = X (x) 1 ('left') or 1 (x) X ('right') on V^(x)3."""
    if sigma.arity != 3:
        raise TensorShapeError(f"expected an operator on V^(x)3, got arity {sigma.arity}")
    m = sigma.matrix
    if placement == 'right':
        candidate = TensorOperator(laurent_matrix(m[0:4, 0:4].tolist(), sigma.var), sigma.var)
        rebuilt = TensorOperator.identity(1, sigma.var).kron(candidate)
    elif placement == 'left':
        candidate = TensorOperator(laurent_matrix(m[0::2, 0::2].tolist(), sigma.var), sigma.var)
        rebuilt = candidate.kron(TensorOperator.identity(1, sigma.var))
    else:
        raise ValueError(f"unknown placement '{placement}'")
    if rebuilt != sigma:
        raise FactorizationError(f"operator is not of the form {'1 (x) X' if placement == 'right' else 'X (x) 1'}")
    return candidate


def factor_pair(sigma1: TensorOperator, sigma2: TensorOperator):
    """Find one X with (sigma1, sigma2) = (X (x) 1, 1 (x) X) or the mirrored placement.

    Returns (X, placement) where placement names where X sits in sigma1.
    """
    for first, second in (('left', 'right'), ('right', 'left')):
        try:
            x1 = factor_placement(sigma1, first)
            x2 = factor_placement(sigma2, second)
        except FactorizationError:
            continue
        if x1 == x2:
            return x1, first
    raise FactorizationError("generator operators do not factor through a single 4x4 matrix")


# Basis of Lambda(R^3), and of the rank-8 quotient Q, indexed by mask: bit i marks v_(i+1).
# Taking the mask as the kron index puts v_i in tensor factor 4 - i.
MASK_TENSOR_ORDER = tuple(range(8))

# Listed correspondence (1, v1, v2, v1v2, v3, ...) -> (e1e1e1, e1e2e1, e2e1e1, e2e2e1, e1e1e2, ...).
# The generator operators do not factor through a 4x4 matrix in this order.
LISTED_TENSOR_ORDER = (0, 2, 4, 6, 1, 3, 5, 7)


def reindex(op: TensorOperator, order: Sequence[int]) -> TensorOperator:
    """Move basis element r to position order[r]."""
    if sorted(order) != list(range(op.dim)):
        raise TensorShapeError(f"{tuple(order)} is not a permutation of 0..{op.dim - 1}")
    rows = [[0] * op.dim for _ in range(op.dim)]
    for r in range(op.dim):
        for c in range(op.dim):
            rows[order[r]][order[c]] = op.matrix[r, c]
    return TensorOperator(laurent_matrix(rows, op.var), op.var)


def factor_in_order(sigma1: TensorOperator, sigma2: TensorOperator, order: Sequence[int]):
    """factor_pair after carrying both operators to the tensor basis through `order`."""
    return factor_pair(reindex(sigma1, order), reindex(sigma2, order))


def factors_in_order(sigma1: TensorOperator, sigma2: TensorOperator, order: Sequence[int]) -> bool:
    try:
        factor_in_order(sigma1, sigma2, order)
    except FactorizationError:
        return False
    return True
