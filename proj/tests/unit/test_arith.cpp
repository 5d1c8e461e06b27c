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

#include "bernmat/rational.hpp"
#include "support.hpp"

using namespace bernmat;
using testing::Q;
using testing::Z;

TEST_SUITE("exact-arith")
{
    TEST_CASE("rational examples")
    {
        CHECK(Q("1/2") + Q("1/3") == Q("5/6"));
        CHECK(Rational(Integer(2), Integer(4)).to_string() == "1/2");
        CHECK(Q("-1/30") + Q("1/42") == Q("-1/105"));
        CHECK(Rational(0).to_string() == "0");
        CHECK(Q("-0/5").denominator() == 1);
        CHECK(Q("7").to_string() == "7");
        CHECK(Q("-22/7").to_string() == "-22/7");
    }

    TEST_CASE("rational pow, compare and errors")
    {
        CHECK(pow(Q("2/3"), 3) == Q("8/27"));
        CHECK(pow(Q("2/3"), -2) == Q("9/4"));
        CHECK(pow(Q("0"), 0) == Rational(1));
        CHECK_THROWS_AS(pow(Rational(0), -1), DomainError);
        CHECK_THROWS_AS(Q("1/2") / Rational(0), DomainError);
        CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), DomainError);
        CHECK(Q("-1/2") < Q("1/3"));
        CHECK(Q("1/3") > Q("1/4"));
        CHECK(abs(Q("-5/3")) == Q("5/3"));
        CHECK(Q("3/1").is_integer());
        CHECK(Q("-3/7").sign() == -1);
    }

    TEST_CASE("rational parse errors")
    {
        for (const char *bad : {"", "1/", "/2", "a", "1/2/3", "1.5", "--1", "1/0", "6/-4"})
            CHECK_THROWS_AS(Q(bad), std::exception);
        CHECK_THROWS_AS(Q("abc"), ParseError);
    }

    TEST_CASE("gaussian examples")
    {
        CHECK(pow(GaussianRational::i(), 2) == GaussianRational(-1));
        CHECK(Z("1-5*i").conj() == Z("1+5*i"));
        CHECK(Z("1+1*i") * Z("1-1*i") == GaussianRational(2));
        CHECK(Z("1-5*i").to_string() == "1-5*i");
        CHECK(GaussianRational(Rational(0), Q("1/2")).to_string() == "0+1/2*i");
        CHECK(Z("i") == GaussianRational::i());
        CHECK(Z("-i") == -GaussianRational::i());
        CHECK(Z("3/4") == GaussianRational(Q("3/4")));
        CHECK(Z("2-i") == GaussianRational(Q("2"), Q("-1")));
        CHECK_THROWS_AS(Z("2xi"), ParseError);
        CHECK(Z("1/2*i") == GaussianRational(Rational(0), Q("1/2")));
        CHECK(Z("-1/2-3/4*i") == GaussianRational(Q("-1/2"), Q("-3/4")));
        CHECK(i_pow(-1) == -GaussianRational::i());
        CHECK(i_pow(7) == -GaussianRational::i());
        CHECK(Z("1+1*i").norm() == Rational(2));
        CHECK_THROWS_AS(GaussianRational(1) / GaussianRational(), DomainError);
        CHECK_THROWS_AS(Z("1+2*j"), ParseError);
    }

    TEST_CASE("factorial and binomial")
    {
        CHECK(factorial(0) == 1);
        CHECK(factorial(10) == 3628800);
        CHECK(binomial(7, 3) == 35);
        CHECK(binomial(5, 7) == 0);
        CHECK(binomial(5, -1) == 0);
        CHECK(binomial(0, 0) == 1);
        CHECK(binomial(60, 30) == Integer("118264581564861424", 10));
    }

    TEST_CASE("to_decimal examples")
    {
        CHECK(to_decimal(Q("1/6"), 6) == "0.166667");
        CHECK(to_decimal(Q("-1/30"), 4) == "-0.0333");
        auto [re, im] = to_decimal(GaussianRational(Q("5/6"), Q("1/2")), 2);
        CHECK(re == "0.83");
        CHECK(im == "0.50");
        CHECK(to_decimal(Q("1/8"), 2) == "0.12");
        CHECK(to_decimal(Q("3/8"), 2) == "0.38");
        CHECK(to_decimal(Q("-1/8"), 2) == "-0.12");
        CHECK(to_decimal(Q("-1/1000"), 2) == "0.00");
        CHECK(to_decimal(Q("5/2"), 1) == "2.5");
        CHECK(to_decimal(Q("-7"), 3) == "-7.000");
        CHECK(sqrt_to_decimal(Rational(2), 6) == "1.414214");
        CHECK(sqrt_to_decimal(Q("1/25"), 3) == "0.200");
    }

    TEST_CASE("property: field axioms and canonical form")
    {
        testing::Gen g(11);
        for (int trial = 0; trial < 400; ++trial) {
            Rational p = g.rational(), q = g.rational(), r = g.rational();
            CHECK((p + q) + r == p + (q + r));
            CHECK((p * q) * r == p * (q * r));
            CHECK(p * (q + r) == p * q + p * r);
            CHECK(p + q == q + p);
            CHECK(p * q == q * p);
            CHECK(p + (-p) == Rational(0));
            CHECK(p - q == p + (-q));
            if (!q.is_zero()) {
                CHECK((p / q) * q == p);
                CHECK(q * (Rational(1) / q) == Rational(1));
            }
            for (const auto &x : {p + q, p - q, p * q, q.is_zero() ? p : p / q})
                CHECK(testing::canonical(x));
            CHECK(((p < q) == (p.to_double() < q.to_double()) || p.to_double() == q.to_double()));
        }
    }

    TEST_CASE("property: gaussian field axioms")
    {
        testing::Gen g(12);
        for (int trial = 0; trial < 200; ++trial) {
            auto z = g.gaussian(), w = g.gaussian(), u = g.gaussian();
            CHECK(z * (w + u) == z * w + z * u);
            CHECK((z * w) * u == z * (w * u));
            CHECK((z * w).conj() == z.conj() * w.conj());
            CHECK((z * z.conj()) == GaussianRational(z.norm()));
            if (!w.is_zero())
                CHECK((z / w) * w == z);
        }
    }

    TEST_CASE("property: gaussian pow is additive in the exponent")
    {
        testing::Gen g(13);
        for (int trial = 0; trial < 60; ++trial) {
            auto z = g.gaussian(3, 3);
            long m = g.integer(0, 64), n = g.integer(0, 64 - m);
            CHECK(pow(z, m + n) == pow(z, m) * pow(z, n));
        }
    }

    TEST_CASE("property: to_decimal is within half an ulp")
    {
        testing::Gen g(14);
        for (int trial = 0; trial < 300; ++trial) {
            Rational q = g.rational(1000, 997);
            unsigned d = static_cast<unsigned>(g.integer(1, 20));
            Rational back = testing::parse_decimal(to_decimal(q, d));
            Rational half_ulp = pow(Rational(10), -static_cast<long>(d)) / Rational(2);
            CHECK(abs(back - q) <= half_ulp);
        }
    }
}
