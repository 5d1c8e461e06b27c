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

#ifndef BERNMAT_COMBINATORICS_HPP
#define BERNMAT_COMBINATORICS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "bernmat/partitions.hpp"
#include "bernmat/polynomial.hpp"
#include "bernmat/rational.hpp"

namespace bernmat {

/// Stirling numbers of the second kind, S2(m, n) = n S2(m-1, n) + S2(m-1, n-1).
Integer stirling2(unsigned m, unsigned n);

/// Signed Stirling numbers of the first kind, S1(n, k) = S1(n-1, k-1) - (n-1) S1(n-1, k).
Integer stirling1(unsigned n, unsigned k);

/// Rows 0..max_m of the S2 triangle; row m has m+1 entries.
std::vector<std::vector<Integer>> stirling2_table(unsigned max_m);
std::vector<std::vector<Integer>> stirling1_table(unsigned max_n);

/// B_n (with B_1 = -1/2) from B_0 = 1, sum_{k<=n} C(n+1,k) B_k = 0.
/**
 * Backed by a process-wide table grown on demand to the largest n asked for;
 * the table is mutex-guarded so concurrent callers see consistent values.
 */
Rational bernoulli_number(unsigned n);

/// B_0..B_n.
std::vector<Rational> bernoulli_numbers(unsigned n);

/// B_n = (-1)^n n! det(H_n), H_n the n x n lower Hessenberg matrix with
/// entry (i, j) = 1/(i-j+2)! for j <= i+1. Independent of the recurrence.
Rational bernoulli_number_determinant(unsigned n);

/// B_n(x) = sum_v C(n,v) B_v x^(n-v).
RationalPolynomial bernoulli_polynomial(unsigned n);

GaussianRational bernoulli_poly_eval(unsigned n, const GaussianRational &z);

/// Complete exponential Bell polynomial B_n(w_1, ..., w_n), n = w.size().
template <class F>
F complete_bell(std::span<const F> w)
{
    const std::size_t n = w.size();
    if (n == 0)
        return F(1);
    // powers[j][e] = w_{j+1}^e / ((j+1)!^e e!)
    std::vector<std::vector<F>> scaled(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t max_e = n / (j + 1);
        F base = w[j] / F(Rational(factorial(j + 1)));
        scaled[j].reserve(max_e + 1);
        scaled[j].push_back(F(1));
        for (std::size_t e = 1; e <= max_e; ++e)
            scaled[j].push_back(scaled[j].back() * base / F(static_cast<long>(e)));
    }
    F sum(0);
    for_each_multiplicity(n, n, [&](std::span<const std::size_t> k) {
        F term(1);
        for (std::size_t j = 0; j < n; ++j)
            if (k[j])
                term *= scaled[j][k[j]];
        sum += term;
    });
    return F(Rational(factorial(n))) * sum;
}

template <class F>
F complete_bell(const std::vector<F> &w)
{
    return complete_bell(std::span<const F>(w));
}

/// S_v^m(x) = sum_{j=v}^{m} C(m,j) S2(j,v) x^(m-j); zero when v > m.
RationalPolynomial array_polynomial(unsigned v, unsigned m);

} // namespace bernmat

#endif
