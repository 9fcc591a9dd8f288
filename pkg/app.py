#!/usr/bin/env python3
"""
Web API for the braid algebra toolkit
Serves the invariants, R-matrices, oracles and the verification report as JSON
"""

from flask import Flask, jsonify, request

from braids.braid_words import parse_braid
from cli.knot_cli import RMATRIX_KINDS, r_matrix, run_verify
from config.settings import DEBUG, HOST, PORT
from invariants.oracles import bracket_jones, fox_alexander
from invariants.yang_baxter import alexander, jones, ybe_check

app = Flask(__name__)


def _braid_from_query():
    word = request.args.get('word', '')
    strands = request.args.get('strands')
    if strands is None:
        raise ValueError("missing 'strands' parameter")
    try:
        strands = int(strands)
    except ValueError:
        raise ValueError(f"'strands' must be an integer, got '{strands}'")
    return parse_braid(word, strands)


@app.errorhandler(ValueError)
def bad_input(e):
    return jsonify({'error': str(e)}), 400


@app.errorhandler(ArithmeticError)
def failed_computation(e):
    return jsonify({'error': str(e)}), 500


# Web Routes
@app.route('/api/jones', methods=['GET'])
def jones_endpoint():
    """Jones polynomial of the closure; ?half=1 keeps it in s = t^(1/2)."""
    b = _braid_from_query()
    half = request.args.get('half', '').lower() in ('1', 'true', 'yes')
    return jsonify({'word': str(b), 'strands': b.strands, 'jones': jones(b, in_t=not half).to_json()})


@app.route('/api/alexander', methods=['GET'])
def alexander_endpoint():
    b = _braid_from_query()
    return jsonify({'word': str(b), 'strands': b.strands, 'alexander': alexander(b).to_json()})


@app.route('/api/rmatrix/<kind>', methods=['GET'])
def rmatrix_endpoint(kind):
    kind = kind.lower()
    if kind not in RMATRIX_KINDS:
        return jsonify({'error': f"unknown R-matrix '{kind}'"}), 404
    x = r_matrix(kind)
    return jsonify({'kind': kind, 'matrix': x.to_json(), 'ybe': ybe_check(x)})


@app.route('/api/oracle/<kind>', methods=['GET'])
def oracle_endpoint(kind):
    kind = kind.lower()
    if kind not in ('bracket', 'fox'):
        return jsonify({'error': f"unknown oracle '{kind}'"}), 404
    b = _braid_from_query()
    value = bracket_jones(b) if kind == 'bracket' else fox_alexander(b)
    return jsonify({'word': str(b), 'strands': b.strands, kind: value.to_json()})


@app.route('/api/verify', methods=['GET'])
def verify_endpoint():
    return jsonify(run_verify().to_json())


if __name__ == '__main__':
    try:
        print(f"Starting web server on http://{HOST}:{PORT}")
        app.run(host=HOST, port=PORT, debug=DEBUG)
    except KeyboardInterrupt:
        print("\nReceived interrupt signal...")
