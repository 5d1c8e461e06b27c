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


#include <doctest.h>

#include "bernmat/combinatorics.hpp"
#include "bernmat/series.hpp"
#include "support.hpp"

using namespace bernmat;
using testing::Q;
using Series = TruncatedSeries<Rational>;

namespace {

Series of(std::initializer_list<const char *> cs)
{
    std::vector<Rational> v;
    for (const char *c : cs)
        v.push_back(Q(c));
    return Series(v);
}

Series scaled_power(const Series &f, unsigned k)
{
    return (Rational(1) / Rational(factorial(k))) * pow(f, k);
}

} // namespace

TEST_SUITE("series-oracle")
{
    TEST_CASE("elementary series")
    {
        CHECK(Series::exp_minus_one(3) == of({"0", "1", "1/2", "1/6"}));
        CHECK(Series::log_one_plus(3) == of({"0", "1", "-1/2", "1/3"}));
        CHECK(Series::exp_linear(Rational(2), 2) == of({"1", "2", "2"}));
        CHECK(Series::one(2) == of({"1", "0", "0"}));
        CHECK(Series(4).order() == 4);
        CHECK_THROWS_AS(Series(std::vector<Rational>{}), DomainError);
    }

    TEST_CASE("arithmetic")
    {
        auto e = of({"0", "1", "1/2"});
        CHECK(e * e == of({"0", "0", "1"}));
        auto f = of({"3", "-1", "2/5", "7"});
        CHECK(f * Series::one(3) == f);
        CHECK(pow(Series::exp_minus_one(4), 0) == Series::one(4));
        CHECK((f + e).order() == 2);
        CHECK((f * e).order() == 2);
        CHECK(f - f == Series(3));
        CHECK((Rational(2) * f)[3] == Rational(14));
    }

    TEST_CASE("division by a unit")
    {
        CHECK(bernoulli_generating_series(4) == of({"1", "-1/2", "1/12", "0", "-1/720"}));
        auto f = of({"2", "3", "-1", "1/2"});
        CHECK(div_unit(f, f) == Series::one(3));
        CHECK(div_unit(Series::one(2), of({"2", "0", "0"})) == of({"1/2", "0", "0"}));
        CHECK_THROWS_AS(div_unit(f, of({"0", "1", "0", "0"})), DomainError);
        CHECK_THROWS_AS(Series::one(3).divided_by_t(), DomainError);
    }

    TEST_CASE("egf coefficients")
    {
        CHECK(egf_coefficient(bernoulli_generating_series(6), 2) == Q("1/6"));
        CHECK(egf_coefficient(scaled_power(Series::exp_minus_one(6), 2), 4) == Rational(7));
        auto f = of({"5/3", "1"});
        CHECK(egf_coefficient(f, 0) == Q("5/3"));
        CHECK_THROWS_AS(egf_coefficient(f, 2), RangeError);
    }

    TEST_CASE("oracle consistency with the closed generators")
    {
        const unsigned order = 24;
        auto bgf = bernoulli_generating_series(order);
        for (unsigned n = 0; n <= 20; ++n)
            CHECK(egf_coefficient(bgf, n) == bernoulli_number(n));

        auto lg = Series::log_one_plus(14), ex = Series::exp_minus_one(14);
        for (unsigned k = 0; k <= 12; ++k) {
            auto s1 = scaled_power(lg, k), s2 = scaled_power(ex, k);
            for (unsigned m = k; m <= 12; ++m) {
                CHECK(Rational(stirling1(m, k)) == egf_coefficient(s1, m));
                CHECK(Rational(stirling2(m, k)) == egf_coefficient(s2, m));
            }
        }
    }

    TEST_CASE("property: div_unit(f, g) * g == f")
    {
        testing::Gen gen(21);
        for (int trial = 0; trial < 50; ++trial) {
            std::size_t order = static_cast<std::size_t>(gen.integer(0, 10));
            std::vector<Rational> fc, gc;
            for (std::size_t k = 0; k <= order; ++k) {
                fc.push_back(gen.rational(9, 5));
                gc.push_back(k == 0 ? gen.nonzero_rational(9, 5) : gen.rational(9, 5));
            }
            Series f(fc), g(gc);
            CHECK(div_unit(f, g) * g == f);
        }
    }

    TEST_CASE("gaussian scalar field")
    {
        using ZSeries = TruncatedSeries<GaussianRational>;
        auto e = ZSeries::exp_linear(GaussianRational::i(), 4);
        CHECK(e[2] == GaussianRational(Q("-1/2")));
        CHECK(e[3] == GaussianRational(Rational(0), Q("-1/6")));
        auto inv = ZSeries::exp_linear(-GaussianRational::i(), 4);
        CHECK(e * inv == ZSeries::one(4));
    }
}
