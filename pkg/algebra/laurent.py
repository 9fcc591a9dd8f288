#!/usr/bin/env python3
"""
Exact Laurent polynomials in one variable, Z[t, t^-1]

Sparse storage (exponent -> nonzero int), Python ints for coefficients.
Square matrices over the ring are numpy object arrays of LaurentPoly;
determinants, inverses and exact division go through sympy.
"""

from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

import numpy as np
import sympy as sp


class LaurentError(ArithmeticError):
    """Exact Laurent arithmetic was asked for something it cannot do."""


class NonExactDivisionError(LaurentError):
    pass


Scalar = Union[int, "LaurentPoly"]


class LaurentPoly:
    __slots__ = ('terms', 'var')

    def __init__(self, terms: Union[Mapping[int, int], Iterable[Tuple[int, int]]] = (), var: str = 't'):
        collected: Dict[int, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, coef in items:
            collected[int(exp)] = collected.get(int(exp), 0) + int(coef)
        self.terms: Tuple[Tuple[int, int], ...] = tuple(
            sorted((e, c) for e, c in collected.items() if c != 0))
        self.var = var

    # ----- constructors -----
    @classmethod
    def constant(cls, c: int, var: str = 't') -> "LaurentPoly":
        return cls({0: c}, var)

    @classmethod
    def monomial(cls, coef: int, exp: int, var: str = 't') -> "LaurentPoly":
        return cls({exp: coef}, var)

    @classmethod
    def coerce(cls, value: Scalar, var: str = 't') -> "LaurentPoly":
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, (int, np.integer)):
            return cls.constant(int(value), var)
        raise TypeError(f"cannot treat {type(value).__name__} as a Laurent polynomial")

    # ----- queries -----
    def as_dict(self) -> Dict[int, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0] == 0)

    def is_unit(self) -> bool:
        """+-t^k"""
        return len(self.terms) == 1 and abs(self.terms[0][1]) == 1

    def min_exp(self) -> int:
        if not self.terms:
            raise LaurentError("zero polynomial has no lowest exponent")
        return self.terms[0][0]

    def max_exp(self) -> int:
        if not self.terms:
            raise LaurentError("zero polynomial has no highest exponent")
        return self.terms[-1][0]

    def coefficient(self, exp: int) -> int:
        return dict(self.terms).get(exp, 0)

    def _merge_var(self, other: "LaurentPoly") -> str:
        if self.var == other.var or other.is_constant():
            return self.var
        if self.is_constant():
            return other.var
        raise LaurentError(f"mixing variables {self.var} and {other.var}")

    # ----- ring operations -----
    def __add__(self, other: Scalar) -> "LaurentPoly":
        try:
            other = LaurentPoly.coerce(other, self.var)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms:
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out, self._merge_var(other))

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.terms}, self.var)

    def __sub__(self, other: Scalar) -> "LaurentPoly":
        try:
            other = LaurentPoly.coerce(other, self.var)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "LaurentPoly":
        return LaurentPoly.coerce(other, self.var) - self

    def __mul__(self, other: Scalar) -> "LaurentPoly":
        try:
            other = LaurentPoly.coerce(other, self.var)
        except TypeError:
            return NotImplemented
        out: Dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out, self._merge_var(other))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if not self.is_unit():
                raise LaurentError(f"{self} is not invertible in Z[{self.var}, {self.var}^-1]")
            (e, c), = self.terms
            return LaurentPoly({e * n: c ** -n}, self.var)
        result = LaurentPoly.constant(1, self.var)
        for _ in range(n):
            result = result * self
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        return LaurentPoly({e + k: c for e, c in self.terms}, self.var)

    def substitute_power(self, k: int, var: Optional[str] = None) -> "LaurentPoly":
        """t -> t^k (k may be negative); optionally rename the variable."""
        return LaurentPoly({e * k: c for e, c in self.terms}, var or self.var)

    def evaluate(self, value):
        return sum(c * value ** e for e, c in self.terms) if self.terms else 0

    # ----- equality / hashing -----
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, np.integer)):
            other = LaurentPoly.constant(int(other), self.var)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.terms != other.terms:
            return False
        return self.is_constant() or self.var == other.var

    def __hash__(self) -> int:
        return hash(self.terms)

    # ----- units -----
    def normalize_up_to_units(self) -> "LaurentPoly":
        """Representative of p modulo +-t^k: lowest exponent 0, lowest coefficient positive."""
        if self.is_zero():
            raise LaurentError("cannot normalize the zero polynomial up to units")
        shifted = self.shift(-self.min_exp())
        return -shifted if shifted.terms[0][1] < 0 else shifted

    def equal_up_to_units(self, other: "LaurentPoly") -> bool:
        return self.normalize_up_to_units() == other.normalize_up_to_units()

    def divide_exact(self, divisor: "LaurentPoly") -> "LaurentPoly":
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if self.is_zero():
            return LaurentPoly({}, self.var)
        t = sp.Symbol(self.var)
        num = sp.Poly(self.shift(-self.min_exp()).to_sympy(t), t)
        den = sp.Poly(divisor.shift(-divisor.min_exp()).to_sympy(t), t)
        quotient, remainder = num.div(den)
        if not remainder.is_zero:
            raise NonExactDivisionError(f"{self} is not divisible by {divisor}")
        out = {}
        for (e,), c in quotient.terms():
            if not c.is_integer:
                raise NonExactDivisionError(f"{self} / {divisor} has non-integral coefficients")
            out[e] = int(c)
        return LaurentPoly(out, self.var).shift(self.min_exp() - divisor.min_exp())

    # ----- sympy bridge -----
    def to_sympy(self, symbol: Optional[sp.Symbol] = None):
        symbol = symbol if symbol is not None else sp.Symbol(self.var)
        return sp.Add(*[sp.Integer(c) * symbol ** e for e, c in self.terms])

    @classmethod
    def from_sympy(cls, expr, symbol: sp.Symbol) -> "LaurentPoly":
        expr = sp.cancel(sp.together(sp.sympify(expr)))
        num, den = sp.fraction(expr)
        den_terms = sp.Poly(den, symbol).terms()
        if len(den_terms) != 1 or abs(den_terms[0][1]) != 1:
            raise LaurentError(f"denominator {den} is not a unit of Z[{symbol}, {symbol}^-1]")
        (shift,), sign = den_terms[0]
        out = {}
        for (e,), c in sp.Poly(num, symbol).terms():
            if not c.is_integer:
                raise LaurentError(f"non-integral coefficient {c}")
            out[e - shift] = int(c) * int(sign)
        return cls(out, str(symbol))

    # ----- serialization -----
    def to_json(self) -> dict:
        return {'var': self.var, 'terms': [{'exp': e, 'coef': c} for e, c in self.terms]}

    @classmethod
    def from_json(cls, data: Mapping) -> "LaurentPoly":
        return cls(((t['exp'], t['coef']) for t in data.get('terms', [])), data.get('var', 't'))

    def __str__(self) -> str:
        if not self.terms:
            return '0'
        parts = []
        for e, c in self.terms:
            if e == 0:
                body = str(abs(c))
            else:
                power = self.var if e == 1 else f"{self.var}^{e}"
                body = power if abs(c) == 1 else f"{abs(c)}*{power}"
            sign = '-' if c < 0 else '+'
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ('-' if first_sign == '-' else '') + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


def random_laurent(rng, max_terms: int = 3, exp_range: int = 2, coef_range: int = 3,
                   var: str = 't') -> LaurentPoly:
    """Up to max_terms terms, exponents in [-exp_range, exp_range], coefficients in [-coef_range, coef_range]."""
    return LaurentPoly([(rng.randint(-exp_range, exp_range), rng.randint(-coef_range, coef_range))
                        for _ in range(rng.randint(0, max_terms))], var)


def normalize_up_to_units(p: LaurentPoly) -> LaurentPoly:
    return p.normalize_up_to_units()


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def neg(p: LaurentPoly) -> LaurentPoly:
    return -p


# ---------------- matrices over Z[t, t^-1] ----------------
def laurent_matrix(rows, var: str = 't') -> np.ndarray:
    """numpy object array with every entry coerced to LaurentPoly."""
    rows = [list(r) for r in rows]
    out = np.empty((len(rows), len(rows[0]) if rows else 0), dtype=object)
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            out[i, j] = LaurentPoly.coerce(value, var)
    return out


def identity_matrix(n: int, var: str = 't') -> np.ndarray:
    return laurent_matrix([[1 if i == j else 0 for j in range(n)] for i in range(n)], var)


def zero_matrix(rows: int, cols: int, var: str = 't') -> np.ndarray:
    return laurent_matrix([[0] * cols for _ in range(rows)], var) if rows else np.empty((0, cols), dtype=object)


def matrix_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Entries are LaurentPoly; empty sums come back as LaurentPoly zero."""
    out = np.dot(a, b)
    return laurent_matrix(out.tolist()) if out.size else out


def matrices_equal(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


def matrix_map(m: np.ndarray, fn) -> np.ndarray:
    out = np.empty(m.shape, dtype=object)
    for idx, value in np.ndenumerate(m):
        out[idx] = fn(value)
    return out


def _to_sympy_matrix(m: np.ndarray, symbol: sp.Symbol) -> sp.Matrix:
    return sp.Matrix(m.shape[0], m.shape[1],
                     [LaurentPoly.coerce(x).to_sympy(symbol) for x in m.flat])


def matrix_det(m: np.ndarray, var: str = 't') -> LaurentPoly:
    if m.shape[0] != m.shape[1]:
        raise ValueError(f"determinant of non-square {m.shape} matrix")
    if m.shape[0] == 0:
        return LaurentPoly.constant(1, var)
    symbol = sp.Symbol(var)
    det = _to_sympy_matrix(m, symbol).det(method='berkowitz')
    return LaurentPoly.from_sympy(sp.expand(det), symbol)


def matrix_inverse(m: np.ndarray, var: str = 't') -> np.ndarray:
    """Inverse over Z[t, t^-1]; raises LaurentError when an entry leaves the ring."""
    symbol = sp.Symbol(var)
    inv = _to_sympy_matrix(m, symbol).inv(method='ADJ')
    return laurent_matrix([[LaurentPoly.from_sympy(inv[i, j], symbol) for j in range(inv.cols)]
                           for i in range(inv.rows)], var)


def matrix_to_json(m: np.ndarray) -> list:
    return [[LaurentPoly.coerce(x).to_json() for x in row] for row in m.tolist()]
