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

#include "bernmat/operator.hpp"

#include "bernmat/trace_inverse.hpp"

namespace bernmat {

namespace {

// c^k d^(e-k) - a^k b^(e-k)
Rational bound_difference(const OperatorParams &p, unsigned k, unsigned e)
{
    return pow(p.c, k) * pow(p.d, e - k) - pow(p.a, k) * pow(p.b, e - k);
}

// Coefficients of (cx+d)^e - (ax+b)^e, ascending.
std::vector<Rational> power_difference(const OperatorParams &p, unsigned e)
{
    std::vector<Rational> c(e + 1);
    for (unsigned k = 0; k <= e; ++k)
        c[k] = Rational(binomial(e, k)) * bound_difference(p, k, e);
    return c;
}

void require_square_params(const OperatorParams &p, const char *what)
{
    if (p.c != p.a)
        throw DomainError(std::string(what) + ": square form needs c == a");
}

} // namespace

RationalPolynomial op_E_monomial(unsigned n, const OperatorParams &p)
{
    auto c = power_difference(p, n + 1);
    Rational scale(Integer(1), Integer(n + 1));
    for (auto &x : c)
        x *= scale;
    return RationalPolynomial(std::move(c));
}

RationalPolynomial op_E_poly(const RationalPolynomial &poly, const OperatorParams &p)
{
    RationalPolynomial out;
    for (std::size_t j = 0; j < poly.coeffs().size(); ++j) {
        const Rational &alpha = poly.coeffs()[j];
        if (!alpha.is_zero())
            out += alpha * op_E_monomial(static_cast<unsigned>(j), p);
    }
    return out;
}

RationalMatrix matrix_M_E(unsigned m, const OperatorParams &p, bool square)
{
    if (square)
        require_square_params(p, "matrix_M_E");
    RationalMatrix mat(m, m + 1);
    for (unsigned j = 0; j < m; ++j) {
        Rational scale(Integer(1), Integer(j + 1));
        for (unsigned k = 0; k <= j + 1; ++k)
            mat(j, k) = Rational(binomial(j + 1, k)) * bound_difference(p, k, j + 1) * scale;
    }
    return square ? mat.without_last_column() : mat;
}

std::vector<RationalPolynomial> family_Q(unsigned n, const OperatorParams &p, InverseAlgorithm algorithm)
{
    require_square_params(p, "family_Q");
    if (p.b == p.d)
        throw SingularMatrixError("operator matrix is singular for b == d", 0);
    if (p.a.is_zero())
        throw SingularMatrixError("operator matrix is singular for a == 0", 1);
    return apply_to_basis(invert(matrix_M_E(n, p, true), algorithm), n);
}

std::vector<RationalPolynomial> family_H(unsigned n, const Rational &a, const Rational &b,
                                         InverseAlgorithm algorithm)
{
    return family_Q(n, OperatorParams{a, b, a, b + Rational(1)}, algorithm);
}

std::vector<RationalPolynomial> bernoulli_via_operator(unsigned n, InverseAlgorithm algorithm)
{
    return family_H(n, Rational(1), Rational(0), algorithm);
}

RationalPolynomial derivative_E(const RationalPolynomial &poly, const OperatorParams &p)
{
    const auto &alpha = poly.coeffs();
    if (alpha.empty())
        return {};
    const unsigned n = static_cast<unsigned>(alpha.size()) - 1;
    std::vector<Rational> out(n + 1, Rational(0));
    for (unsigned k = 0; k <= n; ++k) {
        Rational acc(0);
        for (unsigned j = k; j <= n; ++j) {
            if (alpha[j].is_zero())
                continue;
            acc += Rational(binomial(j + 1, k + 1)) * alpha[j] * bound_difference(p, k + 1, j + 1) /
                   Rational(static_cast<long>(j + 1));
        }
        out[k] = Rational(static_cast<long>(k + 1)) * acc;
    }
    return RationalPolynomial(std::move(out));
}

RationalPolynomial y_polynomial(unsigned n, const OperatorParams &p)
{
    return RationalPolynomial(power_difference(p, n + 1));
}

RationalMatrix matrix_M_Y(unsigned n, const OperatorParams &p, bool square)
{
    if (square)
        require_square_params(p, "matrix_M_Y");
    RationalMatrix mat(n + 1, n + 2);
    for (unsigned k = 0; k <= n; ++k) {
        auto row = power_difference(p, k + 1);
        for (unsigned j = 0; j < row.size(); ++j)
            mat(k, j) = row[j];
    }
    return square ? mat.without_last_column() : mat;
}

std::vector<Rational> bernoulli_numbers_via_Y(unsigned n)
{
    return inverse_gauss(matrix_M_Y(n, OperatorParams::bernoulli(), true)).column(0);
}

} // namespace bernmat
