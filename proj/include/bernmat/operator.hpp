// Copyright 2026 The bernmat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BERNMAT_OPERATOR_HPP
#define BERNMAT_OPERATOR_HPP

// The integral operator E[g](x) = int_{ax+b}^{cx+d} g(u) du on Q[x], its
// matrix in the monomial basis, and the polynomial families obtained by
// inverting that matrix.

#include <vector>

#include "bernmat/matrix.hpp"
#include "bernmat/polynomial.hpp"
#include "bernmat/rational.hpp"

namespace bernmat {

/// Integration bounds ax+b (lower) and cx+d (upper).
struct OperatorParams {
    Rational a{1};
    Rational b{0};
    Rational c{1};
    Rational d{1};

    /// (1, 0, 1, 1): the specialization that produces Bernoulli polynomials.
    static OperatorParams bernoulli() { return {}; }

    friend bool operator==(const OperatorParams &, const OperatorParams &) = default;
};

/// E[x^n] = ((cx+d)^(n+1) - (ax+b)^(n+1)) / (n+1), expanded.
RationalPolynomial op_E_monomial(unsigned n, const OperatorParams &p);

/// E[P] by linearity.
RationalPolynomial op_E_poly(const RationalPolynomial &poly, const OperatorParams &p);

/// Row j (j = 0..m-1) holds the coefficients of E[x^j] in 1, x, ..., x^m.
/**
 * Entry (j, k) = C(j+1, k) (c^k d^(j+1-k) - a^k b^(j+1-k)) / (j+1). With
 * `square` set (requires c == a, otherwise DomainError) the last column,
 * identically zero in that case, is dropped, leaving an m x m lower
 * triangular matrix with diagonal a^j (d - b).
 */
RationalMatrix matrix_M_E(unsigned m, const OperatorParams &p, bool square);

/// Q_0..Q_{n-1}: rows of M_E(n, p)^{-1} applied to (1, x, ..., x^(n-1)).
/** Requires c == a (DomainError); b == d or a == 0 throws SingularMatrixError. */
std::vector<RationalPolynomial> family_Q(unsigned n, const OperatorParams &p,
                                         InverseAlgorithm algorithm = InverseAlgorithm::Gauss);

/// H_0..H_{n-1}: the Q family at (a, b, a, b+1). a == 0 throws SingularMatrixError.
std::vector<RationalPolynomial> family_H(unsigned n, const Rational &a, const Rational &b,
                                         InverseAlgorithm algorithm = InverseAlgorithm::Gauss);

/// B_0(x)..B_{n-1}(x) as the H family at a = 1, b = 0.
std::vector<RationalPolynomial> bernoulli_via_operator(unsigned n,
                                                       InverseAlgorithm algorithm = InverseAlgorithm::Gauss);

/// d/dx E[P], from the closed coefficient formula: the coefficient of x^k is
/// (k+1) sum_{j>=k} C(j+1, k+1) alpha_j (c^(k+1) d^(j-k) - a^(k+1) b^(j-k)) / (j+1).
RationalPolynomial derivative_E(const RationalPolynomial &poly, const OperatorParams &p);

/// Y_n = (cx+d)^(n+1) - (ax+b)^(n+1).
RationalPolynomial y_polynomial(unsigned n, const OperatorParams &p);

/// (n+1) x (n+2) matrix, row k = coefficients of Y_k. `square` as in matrix_M_E.
RationalMatrix matrix_M_Y(unsigned n, const OperatorParams &p, bool square);

/// First column of M_Y(n; 1,0,1,1)^{-1}, i.e. B_0..B_n.
std::vector<Rational> bernoulli_numbers_via_Y(unsigned n);

} // namespace bernmat

#endif
