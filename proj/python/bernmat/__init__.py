# Copyright 2026 The bernmat Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact Bernoulli, Stirling, operator-matrix and Hurwitz zeta computations.

Rationals cross the boundary as ``fractions.Fraction``; polynomials are
ascending coefficient lists and matrices are lists of rows.
"""

import json
from fractions import Fraction

from . import _bernmat
from ._bernmat import DomainError, ParseError, RangeError, SingularMatrixError

__all__ = [
    "DomainError", "ParseError", "RangeError", "SingularMatrixError",
    "bernoulli_numbers", "bernoulli_number_determinant", "bernoulli_numbers_via_Y",
    "bernoulli_polynomial", "stirling1", "stirling2", "complete_bell", "array_polynomial",
    "matrix_M_E", "matrix_M_Y", "determinant", "invert", "family_Q", "family_H", "op_E_poly",
    "verify_identity", "hurwitz_zeta_reference", "zeta2_asymptotic", "reciprocal_square_series",
    "run_cli",
]


def _s(q):
    return str(Fraction(q))


def _q(s):
    return Fraction(s)


def _vec(v):
    return [_q(s) for s in v]


def _mat(rows):
    return [_vec(r) for r in rows]


def _params(p):
    return [_s(x) for x in p]


def bernoulli_numbers(n):
    return _vec(_bernmat.bernoulli_numbers(n))


def bernoulli_number_determinant(n):
    return _q(_bernmat.bernoulli_number_determinant(n))


def bernoulli_numbers_via_Y(n):
    return _vec(_bernmat.bernoulli_numbers_via_Y(n))


def bernoulli_polynomial(n):
    return _vec(_bernmat.bernoulli_polynomial(n))


def stirling1(n, k):
    return int(_bernmat.stirling1(n, k))


def stirling2(m, n):
    return int(_bernmat.stirling2(m, n))


def complete_bell(w):
    return _q(_bernmat.complete_bell([_s(x) for x in w]))


def array_polynomial(v, m):
    return _vec(_bernmat.array_polynomial(v, m))


def matrix_M_E(m, params=(1, 0, 1, 1), square=False):
    return _mat(_bernmat.matrix_M_E(m, _params(params), square))


def matrix_M_Y(n, params=(1, 0, 1, 1), square=False):
    return _mat(_bernmat.matrix_M_Y(n, _params(params), square))


def determinant(matrix):
    return _q(_bernmat.determinant([[_s(x) for x in row] for row in matrix]))


def invert(matrix, algorithm="gauss"):
    return _mat(_bernmat.invert([[_s(x) for x in row] for row in matrix], algorithm))


def family_Q(n, params, algorithm="gauss"):
    return _mat(_bernmat.family_Q(n, _params(params), algorithm))


def family_H(n, a, b):
    return _mat(_bernmat.family_H(n, _s(a), _s(b)))


def op_E_poly(poly, params):
    return _vec(_bernmat.op_E_poly([_s(c) for c in poly], _params(params)))


def verify_identity(identity, max_m=20, samples=20, seed=1):
    return _bernmat.verify_identity(identity, max_m, samples, seed)


def hurwitz_zeta_reference(s, a, digits):
    return _bernmat.hurwitz_zeta_reference(s, _s(a), digits)


def zeta2_asymptotic(a, b, max_terms=60, digits=10):
    return json.loads(_bernmat.zeta2_asymptotic_json(_s(a), _s(b), max_terms, digits))


def reciprocal_square_series(a, b, max_terms=60, digits=10):
    return json.loads(_bernmat.reciprocal_square_series_json(_s(a), _s(b), max_terms, digits))


def run_cli(args):
    """Runs the command-line front end in-process; returns (exit_code, stdout, stderr)."""
    return _bernmat.run_cli([str(a) for a in args])
