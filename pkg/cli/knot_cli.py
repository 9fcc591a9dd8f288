#!/usr/bin/env python3
"""
Command line for the braid algebra toolkit

    verify                          Burau / Upsilon / R derivations and their checks
    burau <word> --strands n        Burau matrix (--braid-valued for the group-ring form)
    rmatrix {jones|alexander|grassman}
    alexander <word> --strands n
    jones <word> --strands n
    oracle {bracket|fox} <word> --strands n
    table [path]                    invariants against both oracles, one JSON line per row
    markov                          random conjugation / stabilization battery

Exit codes: 0 success, 1 a check or table row failed, 2 bad input.
"""

import argparse
import json
import os
import random
import sys

# Add project root to path (so imports work when run as a script)
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from algebra.laurent import (LaurentPoly, laurent_matrix, matrices_equal, matrix_product,
                             matrix_to_json, random_laurent)
from braids.braid_words import BraidWord, artin_relations, parse_braid, random_braid
from config import settings
from invariants.knot_table import json_lines, run_table
from invariants.oracles import (bracket_jones, fox_alexander,
                                fox_alexander_all_columns)
from invariants.yang_baxter import (alexander, jones,
                                    jones_structure, markov_battery, ybe_check)
from representations.bimodule import (Q_BASIS, REDUCTIONS, act_by_word, action_equations,
                                      basis_element, derive_R, induced_matrices, jones_r,
                                      random_prequotient, right_action)
from representations.burau import (burau_braid_valued, burau_fox, burau_generator_matrix,
                                   burau_of_word, classical_burau, derive_upsilon_with_placement,
                                   exterior_extension, exterior_generators, specialize, upsilon)
from representations.tensor import (LISTED_TENSOR_ORDER, TensorOperator, factors_in_order,
                                    local_operator)
from utils.report import Report

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

RMATRIX_KINDS = ('jones', 'alexander', 'grassman')


def r_matrix(kind: str) -> TensorOperator:
    if kind == 'alexander':
        return derive_upsilon_with_placement()[0]
    if kind in ('jones', 'grassman'):
        return derive_R(kind)
    raise ValueError(f"unknown R-matrix '{kind}', expected one of {', '.join(RMATRIX_KINDS)}")


# ---------------- verify ----------------
def _burau_relations(report: Report):
    for n in (3, 4, 5):
        for lhs, rhs in artin_relations(n):
            report.check(f"B_{n} relation {lhs} = {rhs}",
                         lambda: burau_of_word(lhs) == burau_of_word(rhs))
        for i in range(1, n):
            report.check(f"B_{n} tau_{i} tau_{i}^-1 = 1",
                         lambda: (burau_braid_valued(i, n) * burau_braid_valued(-i, n)).is_identity())


def _burau_specialization(report: Report):
    def all_match():
        return all(matrices_equal(specialize(burau_braid_valued(i, n)), burau_generator_matrix(i, n))
                   for n in range(2, 6) for i in list(range(1, n)) + list(range(1 - n, 0)))
    report.check("braid-valued Burau specializes to classical Burau (n <= 5)", all_match)


def _fox_route(report: Report, rng: random.Random):
    words = [random_braid(rng, rng.randint(2, 4), rng.randint(0, 6))
             for _ in range(settings.TEST_BATTERY_SIZE)]
    report.check("generator product agrees with Fox derivatives of psi(b)",
                 lambda: all(burau_of_word(b) == burau_fox(b) for b in words))


def _random_matrix(rng: random.Random):
    return laurent_matrix([[random_laurent(rng, max_terms=2) for _ in range(3)] for _ in range(3)])


def _upsilon_checks(report: Report, candidate: TensorOperator = None, rng: random.Random = None):
    derived, placement = derive_upsilon_with_placement()
    x = derived if candidate is None else candidate
    sigma = exterior_generators()
    positions = (1, 2) if placement == 'left' else (2, 1)
    report.check("Upsilon factors the exterior Burau operators",
                 lambda: all(local_operator(x, p, 3) == s for p, s in zip(positions, sigma)))
    report.add("derived Upsilon equals the listed Upsilon (corner -t)", x == upsilon(),
               f"sigma_1 = {'X (x) 1' if placement == 'left' else '1 (x) X'}")
    report.check("Upsilon satisfies the Yang-Baxter equation", ybe_check, x)
    report.add("exterior sigma_1 sigma_2 sigma_1 = sigma_2 sigma_1 sigma_2",
               sigma[0] @ sigma[1] @ sigma[0] == sigma[1] @ sigma[0] @ sigma[1])
    report.add("listed Lambda -> V(x)3 order does not factor the exterior operators",
               not factors_in_order(sigma[0], sigma[1], LISTED_TENSOR_ORDER),
               "derivation uses the mask order")

    def products_preserved():
        for _ in range(settings.EXTERIOR_PRODUCT_TRIALS):
            m, n = _random_matrix(rng), _random_matrix(rng)
            lhs = exterior_extension(matrix_product(m, n))
            if not matrices_equal(lhs, matrix_product(exterior_extension(m), exterior_extension(n))):
                return False
        return True
    report.check(f"exterior extension preserves products ({settings.EXTERIOR_PRODUCT_TRIALS} random pairs)",
                 products_preserved)
    report.data.setdefault('matrices', {})['upsilon'] = x.to_json()


def _bimodule_checks(report: Report, rng: random.Random):
    for label, mono, generator, expected in action_equations():
        check = report.check(f"action {label}", lambda: right_action(basis_element(mono), generator) == expected)
        if not check.detail:
            check.detail = f"= {expected}"
    report.check("tau_g then tau_g^-1 fixes the eight basis monomials",
                 lambda: all(act_by_word(basis_element(mono), BraidWord(3, (g, -g))) == basis_element(mono)
                             for mono in Q_BASIS for g in (1, -1, 2, -2)))
    matrices = report.data.setdefault('matrices', {})
    for reduction in ('jones', 'grassman'):
        mats = induced_matrices(reduction)
        report.add(f"{reduction} quotient: tau_1 tau_2 tau_1 = tau_2 tau_1 tau_2 on Q",
                   mats[1] @ mats[2] @ mats[1] == mats[2] @ mats[1] @ mats[2])
        report.add(f"listed Q -> V(x)3 order does not factor the {reduction} quotient",
                   not factors_in_order(mats[1], mats[2], LISTED_TENSOR_ORDER),
                   "derivation uses the mask order")
        reducer = REDUCTIONS[reduction]
        samples = [random_prequotient(rng) for _ in range(settings.TEST_BATTERY_SIZE)]
        report.check(f"reduce_{reduction} is idempotent",
                     lambda: all(reducer(reducer(x).monomials()) == reducer(x) for x in samples))
    r = derive_R('jones')
    report.add("derived R equals the listed R (corner 1)", r == jones_r())
    report.check("R satisfies the Yang-Baxter equation", ybe_check, r)
    grassman = derive_R('grassman')
    report.add("Grassman quotient recovers Upsilon", grassman == upsilon())
    matrices['R'] = r.to_json()
    matrices['grassman'] = grassman.to_json()


def _enhancement_checks(report: Report):
    structure = jones_structure()
    for name, ok in structure.conditions():
        report.add(f"enhancement: {name}", ok)
    report.data['enhancement'] = structure.to_json()


def run_verify(upsilon_override: TensorOperator = None) -> Report:
    """Every derivation check; `upsilon_override` replaces the derived Upsilon (negative control)."""
    report = Report("Braid algebra verification")
    rng = random.Random(settings.RANDOM_SEED)
    report.guarded("Burau relations", _burau_relations, report)
    report.guarded("Burau specialization", _burau_specialization, report)
    report.guarded("Burau Fox route", _fox_route, report, rng)
    report.guarded("Upsilon", _upsilon_checks, report, upsilon_override, rng)
    report.guarded("bimodule", _bimodule_checks, report, rng)
    report.guarded("enhancement", _enhancement_checks, report)
    return report


# ---------------- commands ----------------
def _braid(args):
    return parse_braid(' '.join(args.word), args.strands)


def _emit(args, payload: dict, text: str):
    print(json.dumps(payload) if args.json else text)


def matrices_text(report: Report) -> str:
    lines = []
    for name, rows in report.data.get('matrices', {}).items():
        lines.append(f"{name}:")
        lines.extend('  ' + '  '.join(str(LaurentPoly.from_json(e)) for e in row) for row in rows)
    return '\n'.join(lines)


def cmd_verify(args) -> int:
    report = run_verify()
    print(report.dumps() if args.json else report.to_text() + '\n\n' + matrices_text(report))
    return EXIT_OK if report.all_passed else EXIT_FAILED


def cmd_burau(args) -> int:
    b = _braid(args)
    if args.braid_valued:
        m = burau_of_word(b)
        text = '\n'.join([f"prefix: {m.prefix}"] + ['  '.join(str(e) for e in row) for row in m.body])
        _emit(args, m.to_json(), text)
    else:
        m = classical_burau(b)
        _emit(args, {'word': str(b), 'strands': b.strands, 'matrix': matrix_to_json(m)},
              '\n'.join('  '.join(str(e) for e in row) for row in m.tolist()))
    return EXIT_OK


def cmd_rmatrix(args) -> int:
    x = r_matrix(args.kind)
    holds = ybe_check(x)
    text = '\n'.join(['  '.join(row) for row in x.rows_text()]
                     + [f"{'✓' if holds else '❌'} Yang-Baxter equation"])
    _emit(args, {'kind': args.kind, 'matrix': x.to_json(), 'ybe': holds}, text)
    return EXIT_OK if holds else EXIT_FAILED


def cmd_alexander(args) -> int:
    b = _braid(args)
    value = alexander(b)
    _emit(args, {'word': str(b), 'strands': b.strands, 'alexander': value.to_json()}, str(value))
    return EXIT_OK


def cmd_jones(args) -> int:
    b = _braid(args)
    value = jones(b, in_t=not args.half)
    _emit(args, {'word': str(b), 'strands': b.strands, 'jones': value.to_json()}, str(value))
    return EXIT_OK


def cmd_oracle(args) -> int:
    b = _braid(args)
    if args.kind == 'bracket':
        value = bracket_jones(b)
        _emit(args, {'word': str(b), 'bracket': value.to_json()}, str(value))
        return EXIT_OK
    values = fox_alexander_all_columns(b) if args.all_columns else [fox_alexander(b)]
    agree = all(v == values[0] for v in values)
    _emit(args, {'word': str(b), 'fox': values[0].to_json(), 'columns_agree': agree},
          str(values[0]) + ('' if agree else '  (column choices disagree)'))
    return EXIT_OK if agree else EXIT_FAILED


def cmd_table(args) -> int:
    report = run_table(args.path, args.workers)
    if args.json:
        lines = json_lines(report)
        if lines:
            print(lines)
    else:
        print(report.to_text())
    return EXIT_OK if report.all_passed else EXIT_FAILED


def cmd_markov(args) -> int:
    report = markov_battery(args.trials, args.seed)
    print(report.dumps() if args.json else report.to_text())
    return EXIT_OK if report.all_passed else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='knot_cli', description="Braid-group representations and knot invariants")
    parser.add_argument('--json', action='store_true', help="machine-readable output")
    sub = parser.add_subparsers(dest='command', required=True)

    def with_word(p):
        p.add_argument('word', nargs='*', help="braid word, e.g. 1 -2 1 -2")
        p.add_argument('--strands', '-n', type=int, required=True)
        return p

    sub.add_parser('verify').set_defaults(handler=cmd_verify)
    p = with_word(sub.add_parser('burau'))
    p.add_argument('--braid-valued', action='store_true')
    p.set_defaults(handler=cmd_burau)
    p = sub.add_parser('rmatrix')
    p.add_argument('kind', choices=RMATRIX_KINDS)
    p.set_defaults(handler=cmd_rmatrix)
    with_word(sub.add_parser('alexander')).set_defaults(handler=cmd_alexander)
    p = with_word(sub.add_parser('jones'))
    p.add_argument('--half', action='store_true', help="keep the result in s = t^(1/2)")
    p.set_defaults(handler=cmd_jones)
    p = sub.add_parser('oracle')
    p.add_argument('kind', choices=('bracket', 'fox'))
    with_word(p)
    p.add_argument('--all-columns', action='store_true', help="fox: compare every deleted column")
    p.set_defaults(handler=cmd_oracle)
    p = sub.add_parser('table')
    p.add_argument('path', nargs='?', default=settings.KNOT_TABLE_PATH)
    p.add_argument('--workers', type=int, default=settings.TABLE_WORKERS)
    p.set_defaults(handler=cmd_table)
    p = sub.add_parser('markov')
    p.add_argument('--trials', type=int, default=settings.MARKOV_TRIALS)
    p.add_argument('--seed', type=int, default=settings.RANDOM_SEED)
    p.set_defaults(handler=cmd_markov)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == '__main__':
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        print("\nInterrupted")
        sys.exit(EXIT_FAILED)
