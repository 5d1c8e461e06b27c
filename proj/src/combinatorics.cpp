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

#include "bernmat/combinatorics.hpp"

#include <algorithm>
#include <mutex>

#include "bernmat/matrix.hpp"

namespace bernmat {

std::vector<std::vector<Integer>> stirling2_table(unsigned max_m)
{
    std::vector<std::vector<Integer>> t(max_m + 1);
    t[0] = {Integer(1)};
    for (unsigned m = 1; m <= max_m; ++m) {
        t[m].assign(m + 1, Integer(0));
        for (unsigned n = 1; n <= m; ++n) {
            Integer v = (n <= m - 1) ? Integer(t[m - 1][n] * n) : Integer(0);
            v += t[m - 1][n - 1];
            t[m][n] = v;
        }
    }
    return t;
}

std::vector<std::vector<Integer>> stirling1_table(unsigned max_n)
{
    std::vector<std::vector<Integer>> t(max_n + 1);
    t[0] = {Integer(1)};
    for (unsigned n = 1; n <= max_n; ++n) {
        t[n].assign(n + 1, Integer(0));
        for (unsigned k = 1; k <= n; ++k) {
            Integer v = t[n - 1][k - 1];
            if (k <= n - 1)
                v -= t[n - 1][k] * (n - 1);
            t[n][k] = v;
        }
    }
    return t;
}

Integer stirling2(unsigned m, unsigned n)
{
    if (n > m)
        return 0;
    // Single column sweep: row[k] holds S2(current, k) for k <= n.
    std::vector<Integer> row(n + 1, Integer(0));
    row[0] = 1;
    for (unsigned i = 1; i <= m; ++i) {
        for (unsigned k = std::min(i, n); k >= 1; --k)
            row[k] = row[k] * k + row[k - 1];
        row[0] = 0;
    }
    return row[n];
}

Integer stirling1(unsigned n, unsigned k)
{
    if (k > n)
        return 0;
    std::vector<Integer> row(k + 1, Integer(0));
    row[0] = 1;
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = std::min(i, k); j >= 1; --j)
            row[j] = row[j - 1] - row[j] * (i - 1);
        row[0] = 0;
    }
    return row[k];
}

namespace {

struct BernoulliTable {
    std::mutex mutex;
    std::vector<Rational> values{Rational(1)};

    // Caller holds the mutex.
    void extend_to(unsigned n)
    {
        for (unsigned m = static_cast<unsigned>(values.size()); m <= n; ++m) {
            // sum_{k=0}^{m} C(m+1,k) B_k = 0  =>  B_m = -(1/(m+1)) sum_{k<m} C(m+1,k) B_k
            Rational acc(0);
            for (unsigned k = 0; k < m; ++k)
                if (!values[k].is_zero())
                    acc += Rational(binomial(m + 1, k)) * values[k];
            values.push_back(-acc / Rational(static_cast<long>(m + 1)));
        }
    }
};

BernoulliTable &bernoulli_table()
{
    static BernoulliTable table;
    return table;
}

} // namespace

Rational bernoulli_number(unsigned n)
{
    auto &t = bernoulli_table();
    std::lock_guard lock(t.mutex);
    t.extend_to(n);
    return t.values[n];
}

std::vector<Rational> bernoulli_numbers(unsigned n)
{
    auto &t = bernoulli_table();
    std::lock_guard lock(t.mutex);
    t.extend_to(n);
    return {t.values.begin(), t.values.begin() + n + 1};
}

Rational bernoulli_number_determinant(unsigned n)
{
    if (n == 0)
        return Rational(1);
    RationalMatrix h(n, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j <= i + 1 && j < n; ++j)
            h(i, j) = Rational(Integer(1), factorial(i - j + 2));
    Rational b = Rational(factorial(n)) * determinant(std::move(h));
    return n % 2 ? -b : b;
}

RationalPolynomial bernoulli_polynomial(unsigned n)
{
    auto b = bernoulli_numbers(n);
    std::vector<Rational> c(n + 1);
    for (unsigned v = 0; v <= n; ++v)
        c[n - v] = Rational(binomial(n, v)) * b[v];
    return RationalPolynomial(std::move(c));
}

GaussianRational bernoulli_poly_eval(unsigned n, const GaussianRational &z)
{
    return bernoulli_polynomial(n)(z);
}

RationalPolynomial array_polynomial(unsigned v, unsigned m)
{
    if (v > m)
        return {};
    auto s2 = stirling2_table(m);
    std::vector<Rational> c(m + 1, Rational(0));
    for (unsigned j = v; j <= m; ++j)
        c[m - j] = Rational(Integer(binomial(m, j) * s2[j][v]));
    return RationalPolynomial(std::move(c));
}

} // namespace bernmat
