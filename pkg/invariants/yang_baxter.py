#!/usr/bin/env python3
"""
Yang-Baxter operators, enhancements and the Jones / Alexander pipelines

Jones comes from the enhanced trace of the R-matrix derived in
representations.bimodule.  Its enhancement needs t^(1/2), so the trace is
computed over s with t = s^2 and converted back when every exponent is even.
Alexander comes from the reduced Burau matrix:
    Delta(t) (1 + t + ... + t^(n-1)) = +-t^k det(reduced(b) - 1).
"""

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Tuple

from algebra.laurent import (LaurentError, LaurentPoly, identity_matrix, laurent_matrix,
                             matrix_det)
from braids.braid_words import BraidWord, NotAKnotError, random_braid
from config import settings
from representations.bimodule import derive_R
from representations.burau import reduced_burau
from representations.tensor import TensorOperator, TensorShapeError, right_multiply_local
from utils.report import Report

HALF_VAR = 's'


class EnhancementError(ArithmeticError):
    """No (mu, alpha, beta) in the scan space makes the operator enhanced."""


def ybe_check(x: TensorOperator) -> bool:
    """(X (x) 1)(1 (x) X)(X (x) 1) == (1 (x) X)(X (x) 1)(1 (x) X)"""
    if x.arity != 2:
        raise TensorShapeError(f"Yang-Baxter check needs an operator on V(x)V, got arity {x.arity}")
    one = TensorOperator.identity(1, x.var)
    s1, s2 = x.kron(one), one.kron(x)
    return s1 @ s2 @ s1 == s2 @ s1 @ s2


def braid_rep(x: TensorOperator, b: BraidWord, x_inverse: Optional[TensorOperator] = None) -> TensorOperator:
    """tau_i -> 1^(i-1) (x) X (x) 1^(n-i-1); inverse letters use X^-1."""
    if x.arity != 2:
        raise TensorShapeError(f"braid generators need an operator on V(x)V, got arity {x.arity}")
    n = b.strands
    m = identity_matrix(2 ** n, x.var)
    if any(letter < 0 for letter in b.letters) and x_inverse is None:
        try:
            x_inverse = x.inverse()
        except LaurentError as e:
            raise LaurentError(f"operator is not invertible over Laurent polynomials: {e}")
    for letter in b.letters:
        m = right_multiply_local(m, x if letter > 0 else x_inverse, abs(letter), n)
    return TensorOperator(laurent_matrix(m.tolist(), x.var), x.var)


# ---------------- enhancement ----------------
@dataclass(frozen=True)
class EnhancedStructure:
    r: TensorOperator
    r_inverse: TensorOperator
    mu: Tuple[LaurentPoly, LaurentPoly]
    alpha: LaurentPoly
    beta: LaurentPoly

    def mu_operator(self) -> TensorOperator:
        return TensorOperator(laurent_matrix([[self.mu[0], 0], [0, self.mu[1]]], self.r.var), self.r.var)

    def conditions(self) -> List[Tuple[str, bool]]:
        var = self.r.var
        mu = self.mu_operator()
        one = TensorOperator.identity(1, var)
        mu2 = mu.kron(mu)
        twisted = one.kron(mu)
        lhs = (self.r @ twisted).partial_trace_last()
        lhs_inv = (self.r_inverse @ twisted).partial_trace_last()
        return [
            ('R commutes with mu (x) mu', self.r @ mu2 == mu2 @ self.r),
            ('Tr_2(R (1 (x) mu)) = alpha beta', lhs.is_scalar() == self.alpha * self.beta),
            ('Tr_2(R^-1 (1 (x) mu)) = alpha^-1 beta', lhs_inv.is_scalar() == self.alpha ** -1 * self.beta),
        ]

    def is_valid(self) -> bool:
        return all(ok for _, ok in self.conditions())

    def unknot_value(self) -> LaurentPoly:
        return self.beta ** -1 * (self.mu[0] + self.mu[1])

    def to_json(self) -> dict:
        return {'mu': [p.to_json() for p in self.mu],
                'alpha': self.alpha.to_json(),
                'beta': self.beta.to_json()}


def _units(var: str, limit: int) -> List[LaurentPoly]:
    return [LaurentPoly({k: sign}, var) for sign in (1, -1) for k in range(-limit, limit + 1)]


def solve_enhancement(x: TensorOperator, limit: int = None) -> EnhancedStructure:
    """Scan mu = diag(1, m), alpha, beta over +-s^k, |k| <= limit, in a fixed order."""
    limit = settings.ENHANCEMENT_EXPONENT_RANGE if limit is None else limit
    if x.arity != 2:
        raise TensorShapeError(f"enhancement needs an operator on V(x)V, got arity {x.arity}")
    r = x if x.var == HALF_VAR else x.substitute_power(2, HALF_VAR)
    try:
        r_inv = r.inverse()
    except LaurentError as e:
        raise EnhancementError(f"operator is not invertible: {e}")
    one = TensorOperator.identity(1, HALF_VAR)
    units = _units(HALF_VAR, limit)
    for m in units:
        mu = TensorOperator(laurent_matrix([[1, 0], [0, m]], HALF_VAR), HALF_VAR)
        mu2 = mu.kron(mu)
        if not r @ mu2 == mu2 @ r:
            continue
        twisted = one.kron(mu)
        c1 = (r @ twisted).partial_trace_last().is_scalar()
        c2 = (r_inv @ twisted).partial_trace_last().is_scalar()
        if c1 is None or c2 is None or not (c1.is_unit() and c2.is_unit()):
            continue
        for alpha in units:
            beta = c1 * alpha ** -1
            if beta in units and alpha ** -1 * beta == c2:
                found = EnhancedStructure(r, r_inv, (LaurentPoly.constant(1, HALF_VAR), m), alpha, beta)
                if settings.VERBOSE:
                    print(f"enhancement: mu = diag(1, {m}), alpha = {alpha}, beta = {beta}")
                return found
    raise EnhancementError(f"no enhancement with exponents in [-{limit}, {limit}]")


@lru_cache(maxsize=1)
def jones_structure() -> EnhancedStructure:
    return solve_enhancement(derive_R('jones'))


def mu_weights(structure: EnhancedStructure, n: int) -> List[LaurentPoly]:
    """Diagonal of mu^(x)n."""
    weights = []
    for index in range(2 ** n):
        w = LaurentPoly.constant(1, HALF_VAR)
        for bit in range(n):
            w = w * structure.mu[index >> bit & 1]
        weights.append(w)
    return weights


def enhanced_trace(b: BraidWord, structure: EnhancedStructure = None) -> LaurentPoly:
    """alpha^-w beta^-n Tr(mu^(x)n rho(b)), unnormalized (the unknot gives s + s^-1)."""
    structure = structure or jones_structure()
    rho = braid_rep(structure.r, b, structure.r_inverse)
    trace = rho.weighted_trace(mu_weights(structure, b.strands))
    return structure.alpha ** -b.exponent_sum() * structure.beta ** -b.strands * trace


def to_t_if_integral(p: LaurentPoly) -> LaurentPoly:
    """s-polynomial with only even exponents -> the same polynomial in t = s^2."""
    if p.var != HALF_VAR or any(e % 2 for e, _ in p.terms):
        return p
    return LaurentPoly({e // 2: c for e, c in p.terms}, 't')


def jones(b: BraidWord, structure: EnhancedStructure = None, in_t: bool = True) -> LaurentPoly:
    """Jones polynomial of the closure; unknot -> 1.

    The trace ratio is multiplied by (-1)^(components - 1) to land on the
    skein normalization (Hopf link -> -s - s^5).  Returned in t when all
    exponents are integral, otherwise in s = t^(1/2).
    """
    structure = structure or jones_structure()
    value = enhanced_trace(b, structure).divide_exact(structure.unknot_value())
    if b.component_count() % 2 == 0:
        value = -value
    return to_t_if_integral(value) if in_t else value


def alexander(b: BraidWord) -> LaurentPoly:
    if not b.is_knot():
        raise NotAKnotError(f"closure of '{b}' has {b.component_count()} components")
    n = b.strands
    reduced = reduced_burau(b)
    det = matrix_det(reduced - identity_matrix(n - 1), 't') if n > 1 else LaurentPoly.constant(1)
    divisor = LaurentPoly({k: 1 for k in range(n)})
    return det.divide_exact(divisor).normalize_up_to_units()


# ---------------- Markov battery ----------------
def _random_case(rng: random.Random, max_strands: int, max_length: int) -> BraidWord:
    n = rng.randint(2, max_strands)
    return random_braid(rng, n, rng.randint(0, max_length))


def _compare(report: Report, label: str, original: BraidWord, moved: BraidWord):
    same_jones = jones(original) == jones(moved)
    report.add(f"jones {label}: {original!r} -> {moved!r}", same_jones)
    if original.is_knot():
        same_alex = alexander(original) == alexander(moved)
        report.add(f"alexander {label}: {original!r} -> {moved!r}", same_alex)


def markov_battery(trials: int = None, seed: int = None,
                   max_strands: int = None, max_length: int = None) -> Report:
    """Random conjugations and stabilizations must leave both invariants unchanged."""
    trials = settings.MARKOV_TRIALS if trials is None else trials
    rng = random.Random(settings.RANDOM_SEED if seed is None else seed)
    max_strands = max_strands or settings.MARKOV_MAX_STRANDS
    max_length = max_length or settings.MARKOV_MAX_LENGTH
    report = Report(f"Markov battery ({trials} conjugations, {trials} stabilizations)")
    for _ in range(trials):
        b = _random_case(rng, max_strands, max_length)
        a = random_braid(rng, b.strands, rng.randint(1, max_length))
        report.guarded(f"conjugation of {b!r}", _compare, report, 'conjugation', b, b.conjugate(a))
    for _ in range(trials):
        b = _random_case(rng, max_strands, max_length)
        sign = rng.choice((1, -1))
        report.guarded(f"stabilization of {b!r}", _compare, report,
                       'stabilization' + ('+' if sign > 0 else '-'), b, b.stabilize(sign))
    return report
