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


#ifndef BERNMAT_TESTS_SUPPORT_HPP
#define BERNMAT_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "bernmat/matrix.hpp"
#include "bernmat/rational.hpp"

namespace bernmat::testing {

// Small hand-rolled generators for the property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Rational rational(long bound = 30, long den_bound = 12)
    {
        return Rational(Integer(integer(-bound, bound)), Integer(integer(1, den_bound)));
    }

    Rational nonzero_rational(long bound = 30, long den_bound = 12)
    {
        Rational q;
        do
            q = rational(bound, den_bound);
        while (q.is_zero());
        return q;
    }

    GaussianRational gaussian(long bound = 6, long den_bound = 5)
    {
        return {rational(bound, den_bound), rational(bound, den_bound)};
    }

    RationalMatrix matrix(std::size_t rows, std::size_t cols, long bound = 5, long den_bound = 4)
    {
        RationalMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = rational(bound, den_bound);
        return m;
    }

    // Lower triangular with unit-bounded entries and a nonzero diagonal.
    RationalMatrix invertible_lower(std::size_t n)
    {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < i; ++j)
                m(i, j) = rational(4, 4);
            m(i, i) = nonzero_rational(4, 4);
        }
        return m;
    }

    std::mt19937_64 &engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline Rational Q(std::string_view s) { return Rational::parse(s); }

inline GaussianRational Z(std::string_view s) { return GaussianRational::parse(s); }

// Parses a plain decimal string such as "-0.0333" back into an exact rational.
inline Rational parse_decimal(const std::string &s)
{
    auto dot = s.find('.');
    std::string digits = s, frac;
    if (dot != std::string::npos) {
        frac = s.substr(dot + 1);
        digits = s.substr(0, dot) + frac;
    }
    Integer num(digits, 10);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    return Rational(num, den);
}

inline bool canonical(const Rational &q)
{
    Integer g;
    Integer n = q.numerator();
    Integer d = q.denominator();
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return d > 0 && g == 1 && (!q.is_zero() || d == 1);
}

} // namespace bernmat::testing

#endif
