#!/usr/bin/env python3
"""
Project configuration and settings - braid algebra toolkit
"""

import os

# Diagnostics: library modules print progress notes only when this is set
VERBOSE = os.environ.get('BRAIDALG_VERBOSE', '').lower() in ('1', 'true', 'yes')

# Enhanced Yang-Baxter search: mu = diag(1, m) and alpha, beta range over
# +/- s^k with |k| <= ENHANCEMENT_EXPONENT_RANGE, where s = t^(1/2)
ENHANCEMENT_EXPONENT_RANGE = 4

# Jones variable identification frozen from the trefoil: t = A^JONES_A_EXPONENT
JONES_A_EXPONENT = -4

# Oracles enumerate 2^c smoothings - refuse diagrams above this
BRACKET_CROSSING_LIMIT = int(os.environ.get('BRAIDALG_BRACKET_LIMIT', 20))

# Bundled knot table (name,strands,word)
KNOT_TABLE_PATH = os.environ.get(
    'BRAIDALG_KNOT_TABLE',
    os.path.join(os.path.dirname(os.path.abspath(__file__)), 'knot_table.csv'),
)

# Table rows are processed on a thread pool, output kept in input order
TABLE_WORKERS = int(os.environ.get('BRAIDALG_WORKERS', 4))

# Property batteries
RANDOM_SEED = 20250101
MARKOV_TRIALS = 200           # full battery (cli `markov`)
MARKOV_MAX_STRANDS = 4
MARKOV_MAX_LENGTH = 10
TEST_BATTERY_SIZE = 20        # reduced battery used by the test suite
EXTERIOR_PRODUCT_TRIALS = 100  # random 3x3 pairs checked by `verify`

# Web server settings
HOST = os.environ.get('BRAIDALG_HOST', '127.0.0.1')
PORT = int(os.environ.get('BRAIDALG_PORT', 5000))
DEBUG = False
