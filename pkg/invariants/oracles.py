#!/usr/bin/env python3
"""
Brute-force oracles for cross-checking the invariant pipelines

Both work on the closed-braid diagram directly and share nothing with the
representation code:
  - Kauffman bracket by enumerating all 2^c smoothings, loops counted with a
    disjoint-set forest;
  - Alexander polynomial from Fox derivatives of the Wirtinger presentation.
Strands run bottom to top.  For tau_i the strand at position i crosses over
to position i+1; for tau_i^-1 the strand at position i+1 crosses over.
"""

from dataclasses import dataclass
from itertools import product
from typing import List, Optional, Tuple

from algebra.free_words import FreeWord
from algebra.group_ring import fox_derivative
from algebra.laurent import LaurentPoly, laurent_matrix, matrix_det
from braids.braid_words import BraidWord, NotAKnotError
from config import settings

BRACKET_VAR = 'A'


class OracleError(ArithmeticError):
    """The diagram is outside what the brute-force oracle handles."""


class CrossingBudgetError(OracleError):
    pass


@dataclass(frozen=True)
class Relation:
    """Wirtinger relation  out = over^sign in over^-sign."""
    over: int
    incoming: int
    outgoing: int
    sign: int


@dataclass(frozen=True)
class PlanarClosure:
    strands: int
    crossings: Tuple[Tuple[int, int], ...]    # (sign, left position, 0-based)

    @classmethod
    def from_braid(cls, b: BraidWord) -> "PlanarClosure":
        return cls(b.strands, tuple((1 if x > 0 else -1, abs(x) - 1) for x in b.letters))

    @property
    def writhe(self) -> int:
        return sum(sign for sign, _ in self.crossings)

    # ----- loops of a smoothing -----
    def _node(self, level: int, position: int) -> int:
        count = len(self.crossings)
        return (level % count if count else 0) * self.strands + position

    def loop_count(self, vertical: Tuple[bool, ...]) -> int:
        """Loops after smoothing every crossing vertically (True) or horizontally (False)."""
        size = max(len(self.crossings), 1) * self.strands
        parent = list(range(size))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb

        for level, ((_, i), keep) in enumerate(zip(self.crossings, vertical)):
            for p in range(self.strands):
                if p not in (i, i + 1):
                    union(self._node(level, p), self._node(level + 1, p))
            if keep:
                union(self._node(level, i), self._node(level + 1, i))
                union(self._node(level, i + 1), self._node(level + 1, i + 1))
            else:
                union(self._node(level, i), self._node(level, i + 1))
                union(self._node(level + 1, i), self._node(level + 1, i + 1))
        return len({find(a) for a in range(size)})

    # ----- Wirtinger presentation -----
    def wirtinger(self) -> Tuple[int, List[Relation]]:
        """(generator count, relations); arcs break only at under-crossings."""
        n = self.strands
        arc_at = list(range(n))
        next_arc = n
        raw = []
        for sign, i in self.crossings:
            new = next_arc
            next_arc += 1
            if sign > 0:
                over, under = arc_at[i], arc_at[i + 1]
                arc_at[i], arc_at[i + 1] = new, over
            else:
                over, under = arc_at[i + 1], arc_at[i]
                arc_at[i], arc_at[i + 1] = over, new
            raw.append((over, under, new, sign))

        parent = list(range(next_arc))

        def find(a):
            while parent[a] != a:
                a = parent[a]
            return a

        for p in range(n):
            ra, rb = find(arc_at[p]), find(p)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
        roots = sorted({find(a) for a in range(next_arc)})
        label = {root: k for k, root in enumerate(roots)}
        relations = [Relation(label[find(o)], label[find(u)], label[find(w)], s) for o, u, w, s in raw]
        return len(roots), relations


def _delta() -> LaurentPoly:
    return LaurentPoly({2: -1, -2: -1}, BRACKET_VAR)


def kauffman_bracket(d: PlanarClosure, limit: int = None) -> LaurentPoly:
    """Sum over smoothings of A^(#A - #B) delta^(loops - 1).

    On a positive crossing the A-smoothing is the vertical one.
    """
    limit = settings.BRACKET_CROSSING_LIMIT if limit is None else limit
    c = len(d.crossings)
    if c > limit:
        raise CrossingBudgetError(f"{c} crossings exceeds the bracket budget of {limit}")
    delta = _delta()
    powers = {0: LaurentPoly.constant(1, BRACKET_VAR)}
    total = LaurentPoly({}, BRACKET_VAR)
    for state in product((True, False), repeat=c):
        a_count = sum(1 for (sign, _), vertical in zip(d.crossings, state) if vertical == (sign > 0))
        loops = d.loop_count(state)
        if loops - 1 not in powers:
            powers[loops - 1] = delta ** (loops - 1)
        total = total + LaurentPoly({a_count - (c - a_count): 1}, BRACKET_VAR) * powers[loops - 1]
    return total


def bracket_jones(b: BraidWord, limit: int = None) -> LaurentPoly:
    """(-A^3)^-w <D>"""
    d = PlanarClosure.from_braid(b)
    kink = LaurentPoly({3: -1}, BRACKET_VAR)
    return kink ** -d.writhe * kauffman_bracket(d, limit)


def jones_in_bracket_variable(p: LaurentPoly) -> LaurentPoly:
    """Rewrite a Jones polynomial in t (or s = t^(1/2)) through t = A^JONES_A_EXPONENT."""
    if p.var == BRACKET_VAR:
        return p
    k = settings.JONES_A_EXPONENT
    if p.var == 's':
        if k % 2:
            raise OracleError("half-integral Jones polynomial needs an even A-exponent")
        k //= 2
    return p.substitute_power(k, BRACKET_VAR)


def fox_matrix(b: BraidWord) -> Tuple[int, list]:
    """Abelianized Fox Jacobian of the Wirtinger relators, as rows of LaurentPoly."""
    generators, relations = PlanarClosure.from_braid(b).wirtinger()
    rows = []
    for rel in relations:
        x = lambda k: FreeWord.generator(generators, k + 1)
        relator = (x(rel.over) ** rel.sign * x(rel.incoming) * x(rel.over) ** -rel.sign
                   * x(rel.outgoing).inverse())
        rows.append([fox_derivative(relator, k).specialize('t') for k in range(1, generators + 1)])
    return generators, rows


def fox_alexander(b: BraidWord, column: Optional[int] = None) -> LaurentPoly:
    """Delete one column and the last relator, take the determinant, normalize."""
    if not b.is_knot():
        raise NotAKnotError(f"closure of '{b}' has {b.component_count()} components")
    generators, rows = fox_matrix(b)
    if generators <= 1:
        return LaurentPoly.constant(1)
    column = generators - 1 if column is None else column
    if not 0 <= column < generators:
        raise OracleError(f"column {column} out of range for {generators} generators")
    minor = [[p for k, p in enumerate(row) if k != column] for row in rows[:-1]]
    if len(minor) != generators - 1:
        raise OracleError(f"{len(rows)} relators for {generators} generators")
    det = matrix_det(laurent_matrix(minor), 't')
    return det.normalize_up_to_units()


def fox_alexander_all_columns(b: BraidWord) -> List[LaurentPoly]:
    generators, _ = PlanarClosure.from_braid(b).wirtinger()
    return [fox_alexander(b, column) for column in range(max(generators, 1))]
