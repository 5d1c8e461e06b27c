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


#include <algorithm>
#include <thread>

#include <doctest.h>

#include "bernmat/combinatorics.hpp"
#include "bernmat/partitions.hpp"
#include "bernmat/series.hpp"
#include "support.hpp"

using namespace bernmat;
using testing::Q;
using testing::Z;

TEST_SUITE("combinatorics")
{
    TEST_CASE("stirling numbers")
    {
        CHECK(stirling2(0, 0) == 1);
        CHECK(stirling2(4, 2) == 7);
        CHECK(stirling2(3, 5) == 0);
        CHECK(stirling2(3, 0) == 0);
        CHECK(stirling2(0, 3) == 0);
        CHECK(stirling2(10, 4) == 34105);
        CHECK(stirling1(0, 0) == 1);
        CHECK(stirling1(3, 1) == 2);
        CHECK(stirling1(2, 1) == -1);
        CHECK(stirling1(5, 2) == -50);
        CHECK(stirling1(2, 4) == 0);
        auto t2 = stirling2_table(6), t1 = stirling1_table(6);
        for (unsigned m = 0; m <= 6; ++m)
            for (unsigned k = 0; k <= m; ++k) {
                CHECK(t2[m][k] == stirling2(m, k));
                CHECK(t1[m][k] == stirling1(m, k));
            }
    }

    TEST_CASE("bernoulli numbers")
    {
        CHECK(bernoulli_number(0) == Rational(1));
        CHECK(bernoulli_number(1) == Q("-1/2"));
        CHECK(bernoulli_number(2) == Q("1/6"));
        CHECK(bernoulli_number(6) == Q("1/42"));
        CHECK(bernoulli_number(20) == Q("-174611/330"));
        CHECK(bernoulli_number(13) == Rational(0));
        auto v = bernoulli_numbers(6);
        REQUIRE(v.size() == 7);
        CHECK(v[4] == Q("-1/30"));
    }

    TEST_CASE("hessenberg determinant route")
    {
        CHECK(bernoulli_number_determinant(0) == Rational(1));
        CHECK(bernoulli_number_determinant(1) == Q("-1/2"));
        CHECK(bernoulli_number_determinant(2) == Q("1/6"));
        for (unsigned n = 0; n <= 15; ++n)
            CHECK(bernoulli_number_determinant(n) == bernoulli_number(n));
    }

    TEST_CASE("bernoulli polynomials")
    {
        CHECK(bernoulli_polynomial(0) == RationalPolynomial{Rational(1)});
        CHECK(bernoulli_polynomial(1).to_string() == "-1/2 + x");
        CHECK(bernoulli_polynomial(2).to_string() == "1/6 - x + x^2");
        CHECK(bernoulli_poly_eval(1, Z("1-5*i")) == Z("1/2-5*i"));
        CHECK(bernoulli_poly_eval(0, Z("7/3+2*i")) == GaussianRational(1));
        CHECK(bernoulli_poly_eval(2, GaussianRational::i()) == Z("-5/6-1*i"));
        for (unsigned n = 0; n <= 20; ++n)
            CHECK(bernoulli_polynomial(n)(Rational(0)) == bernoulli_number(n));
        CHECK(bernoulli_polynomial(3)(Rational(2)) == Rational(3));
    }

    TEST_CASE("complete bell polynomials")
    {
        CHECK(complete_bell(std::vector<Rational>{}) == Rational(1));
        CHECK(complete_bell(std::vector<Rational>{Q("3/7")}) == Q("3/7"));
        Rational w1 = Q("2/3"), w2 = Q("-5/4");
        CHECK(complete_bell(std::vector<Rational>{w1, w2}) == w1 * w1 + w2);
        // All w_j = 1 gives the Bell numbers.
        std::vector<Rational> ones(6, Rational(1));
        CHECK(complete_bell(ones) == Rational(203));
    }

    TEST_CASE("property: complete bell recurrence")
    {
        testing::Gen g(31);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Rational> w;
            for (int j = 0; j < 11; ++j)
                w.push_back(g.rational(6, 5));
            std::vector<Rational> b{Rational(1)};
            for (std::size_t n = 1; n <= 11; ++n)
                b.push_back(complete_bell(std::vector<Rational>(w.begin(), w.begin() + n)));
            for (std::size_t n = 0; n <= 10; ++n) {
                Rational rhs(0);
                for (std::size_t k = 0; k <= n; ++k)
                    rhs += Rational(binomial(n, static_cast<long>(k))) * b[n - k] * w[k];
                CHECK(b[n + 1] == rhs);
            }
        }
    }

    TEST_CASE("multiplicity enumeration")
    {
        std::vector<std::vector<std::size_t>> seen;
        for_each_multiplicity(4, 4, [&](std::span<const std::size_t> k) { seen.emplace_back(k.begin(), k.end()); });
        CHECK(seen.size() == 5); // p(4)
        for (const auto &k : seen) {
            std::size_t total = 0;
            for (std::size_t j = 0; j < k.size(); ++j)
                total += (j + 1) * k[j];
            CHECK(total == 4);
        }
        CHECK(std::is_sorted(seen.begin(), seen.end()));
        int empty = 0;
        for_each_multiplicity(0, 0, [&](std::span<const std::size_t> k) { empty += k.empty(); });
        CHECK(empty == 1);
    }

    TEST_CASE("array polynomials")
    {
        for (unsigned m = 0; m <= 5; ++m)
            CHECK(array_polynomial(0, m) == RationalPolynomial::monomial(m));
        CHECK(array_polynomial(1, 1) == RationalPolynomial{Rational(1)});
        CHECK(array_polynomial(3, 2).is_zero());
        for (unsigned m = 0; m <= 12; ++m)
            for (unsigned v = 0; v <= m; ++v)
                CHECK(array_polynomial(v, m)(Rational(0)) == Rational(stirling2(m, v)));
    }

    TEST_CASE("dn2 over stirling numbers of the first kind")
    {
        for (unsigned n = 0; n <= 20; ++n) {
            Rational lhs(0);
            for (unsigned v = 0; v <= n; ++v)
                lhs += Rational(stirling1(n, v)) * bernoulli_number(v);
            Rational rhs = Rational(factorial(n)) / Rational(static_cast<long>(n + 1));
            CHECK(lhs == (n % 2 ? -rhs : rhs));
        }
    }

    TEST_CASE("concurrent bernoulli table growth")
    {
        std::vector<std::thread> pool;
        std::vector<Rational> got(4);
        for (unsigned t = 0; t < 4; ++t)
            pool.emplace_back([t, &got] { got[t] = bernoulli_number(60 + 10 * t); });
        for (auto &th : pool)
            th.join();
        auto oracle = bernoulli_generating_series(90);
        for (unsigned t = 0; t < 4; ++t)
            CHECK(got[t] == egf_coefficient(oracle, 60 + 10 * t));
    }
}
