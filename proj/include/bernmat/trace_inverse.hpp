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

#ifndef BERNMAT_TRACE_INVERSE_HPP
#define BERNMAT_TRACE_INVERSE_HPP

// Matrix inverses written as polynomials in A whose coefficients are built
// from tr(A), tr(A^2), ..., tr(A^N) (Cayley-Hamilton). Neither routine uses
// elimination: the determinant is also recovered from the traces, so both
// stay independent of inverse_gauss.

#include <cstddef>
#include <span>
#include <vector>

#include "bernmat/combinatorics.hpp"
#include "bernmat/matrix.hpp"
#include "bernmat/partitions.hpp"

namespace bernmat {

namespace detail {

// table[v-1][e] = (-1)^(e+1) t_v^e / (v^e e!)
template <class F>
std::vector<std::vector<F>> newton_factors(std::span<const F> traces, std::size_t total)
{
    std::vector<std::vector<F>> table(traces.size());
    for (std::size_t v = 1; v <= traces.size(); ++v) {
        auto &row = table[v - 1];
        row.push_back(F(-1));
        F scaled(1);
        for (std::size_t e = 1; e * v <= total; ++e) {
            scaled = scaled * traces[v - 1] / F(static_cast<long>(v * e));
            row.push_back(e % 2 == 1 ? scaled : -scaled);
        }
    }
    return table;
}

// Sum over multiplicity vectors (a_1..a_parts), sum v*a_v == total, of the
// product of newton factors.
template <class F>
F newton_sum(const std::vector<std::vector<F>> &table, std::size_t parts, std::size_t total)
{
    F sum(0);
    for_each_multiplicity(parts, total, [&](std::span<const std::size_t> a) {
        F term(1);
        for (std::size_t v = 0; v < parts; ++v)
            term *= table[v][a[v]];
        sum += term;
    });
    return sum;
}

} // namespace detail

/// A^{-1} = (1/det A) sum_{j=0}^{N-1} A^j sum_{a} prod_{v=1}^{N-1}
///   (-1)^(a_v+1) / (v^a_v a_v!) tr(A^v)^a_v, over j + sum v a_v = N-1.
/**
 * det A is the same sum with j = 0 and v running to N. Throws
 * SingularMatrixError (column == N) when it vanishes.
 */
template <class F>
Matrix<F> inverse_cayley_hamilton(const Matrix<F> &a)
{
    a.require_square("inverse");
    const std::size_t n = a.rows();
    if (n == 0)
        return a;
    auto pt = power_traces(a, n);
    std::span<const F> traces(pt.traces);

    auto det_table = detail::newton_factors(traces, n);
    F det = detail::newton_sum(det_table, n, n);
    if (det == F(0))
        throw SingularMatrixError("matrix is singular (trace determinant vanishes)", n);

    auto table = detail::newton_factors(traces.first(n - 1), n - 1);
    Matrix<F> adj(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        F c = detail::newton_sum(table, n - 1, n - 1 - j);
        if (!(c == F(0)))
            adj = adj + c * pt.powers[j];
    }
    return (F(1) / det) * adj;
}

/// A^{-1} = (1/det A) sum_{j=1}^{N} A^(j-1) (-1)^(N-1)/(N-j)!
///   B_{N-j}(w_1, ..., w_{N-j}),  w_k = -(k-1)! tr(A^k),
/// with det A = (-1)^N B_N(w_1, ..., w_N) / N!.
template <class F>
Matrix<F> inverse_bell(const Matrix<F> &a)
{
    a.require_square("inverse");
    const std::size_t n = a.rows();
    if (n == 0)
        return a;
    auto pt = power_traces(a, n);
    std::vector<F> w;
    w.reserve(n);
    for (std::size_t k = 1; k <= n; ++k)
        w.push_back(-(F(Rational(factorial(k - 1))) * pt.traces[k - 1]));
    std::span<const F> ws(w);

    F det = complete_bell(ws) / F(Rational(factorial(n)));
    if (n % 2 == 1)
        det = -det;
    if (det == F(0))
        throw SingularMatrixError("matrix is singular (trace determinant vanishes)", n);

    const F sign = (n % 2 == 1) ? F(1) : F(-1); // (-1)^(N-1)
    Matrix<F> adj(n, n);
    for (std::size_t j = 1; j <= n; ++j) {
        std::size_t r = n - j;
        F c = sign * complete_bell(ws.first(r)) / F(Rational(factorial(r)));
        if (!(c == F(0)))
            adj = adj + c * pt.powers[j - 1];
    }
    return (F(1) / det) * adj;
}

template <class F>
Matrix<F> invert(const Matrix<F> &a, InverseAlgorithm algorithm)
{
    switch (algorithm) {
    case InverseAlgorithm::CayleyHamilton:
        return inverse_cayley_hamilton(a);
    case InverseAlgorithm::Bell:
        return inverse_bell(a);
    case InverseAlgorithm::Gauss:
    default:
        return inverse_gauss(a);
    }
}

/// Row i of minv * (1, x, ..., x^(n-1))^T as a polynomial.
template <class F>
std::vector<Polynomial<F>> apply_to_basis(const Matrix<F> &minv, std::size_t n)
{
    if (minv.rows() != n || minv.cols() != n)
        throw DomainError("apply_to_basis expects an " + std::to_string(n) + "x" + std::to_string(n) +
                          " matrix");
    std::vector<Polynomial<F>> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<F> c(n);
        for (std::size_t j = 0; j < n; ++j)
            c[j] = minv(i, j);
        out.emplace_back(std::move(c));
    }
    return out;
}

} // namespace bernmat

#endif
