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

#ifndef BERNMAT_ZETA_HPP
#define BERNMAT_ZETA_HPP

// Consequences of taking the Laplace transform of the Bernoulli generating
// function t e^{xt}/(e^t - 1): finite identities between Bernoulli
// polynomials, Stirling numbers and array polynomials (all exact), and
// series for Hurwitz zeta values evaluated term by term in Gaussian
// rationals.
//
// The Hurwitz zeta series below are formal: their terms do not tend to zero,
// so they are reported with all partial sums and the minimal-magnitude term
// instead of a single "value".

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bernmat/rational.hpp"

namespace bernmat {

/// Terms and partial sums of a series, plus its optimal truncation point.
struct SeriesEvaluation {
    std::vector<GaussianRational> terms;
    std::vector<GaussianRational> partial_sums;
    /// Index of the term of least modulus; ties go to the smaller index.
    std::size_t optimal_index = 0;
    GaussianRational value_at_optimum;

    static SeriesEvaluation from_terms(std::vector<GaussianRational> terms);

    /// |terms[optimal_index]|^2
    Rational minimal_term_norm() const { return terms.at(optimal_index).norm(); }

    friend bool operator==(const SeriesEvaluation &, const SeriesEvaluation &) = default;
};

/// Rigorous enclosure of zeta(s, a) = sum_{n>=0} (n+a)^-s.
struct HurwitzBracket {
    Rational lower;
    Rational upper;
    /// Number of terms summed exactly is cutoff + 1.
    unsigned long cutoff = 0;

    Rational midpoint() const { return (lower + upper) / Rational(2); }
};

/// Exact partial sum up to n = M, plus the integral tail bounds
/// [(M+1+a)^(1-s), (M+a)^(1-s)] / (s-1); M is the smallest cutoff that makes
/// the bracket narrower than 10^-digits. Requires s >= 2 and a > 0.
HurwitzBracket hurwitz_zeta_bracket(unsigned s, const Rational &a, unsigned digits);

/// Bracket midpoint rendered with `digits` fractional digits.
std::string hurwitz_zeta_reference(unsigned s, const Rational &a, unsigned digits);

/// B_0(z)..B_n(z).
std::vector<GaussianRational> bernoulli_values(const GaussianRational &z, unsigned n);

/// (B_m(a), sum_{v=0}^{m} C(m,v) sum_{n=1}^{v+1} (-1)^(n-1) (n-1)! a^(m-v) S2(v,n-1) / n).
std::pair<Rational, Rational> identity_Ey1(unsigned m, const Rational &a);

/// (sum_{n=1}^{m+1} (-1)^(n-1) (n-1)!/n S_{n-1}^m(a),
///  sum_{v=0}^{m} C(m,v) (ib)^(m-v) B_v(a - ib)).
std::pair<GaussianRational, GaussianRational> identity_afI2(unsigned m, const Rational &a, const Rational &b);

/// (B_m(a), sum_{n=0}^{m} sum_{v=0}^{n} S1(n,v) B_v S_n^m(a)).
std::pair<Rational, Rational> identity_afI01(unsigned m, const Rational &a);

/// (sum_{v=0}^{n} S1(n,v) B_v, (-1)^n n!/(n+1)).
std::pair<Rational, Rational> identity_dn2(unsigned n);

/// Terms i^(n-1) B_n(a - ib) / b^(n+1), n = 0..max_terms (formally zeta(2, a)).
/** Requires a > 0 and b > 0. */
SeriesEvaluation zeta2_asymptotic(const Rational &a, const Rational &b, unsigned max_terms);

/// Terms ((-1)^k/(k+1)!) (-1)^n / x^(n+1) d^k/dy^k B_n(y - x), n = 0..max_terms
/// (formally zeta(k+2, y)); d^k/dy^k B_n(y-x) = n!/(n-k)! B_{n-k}(y-x).
/** At k = 0, x = ib this reproduces zeta2_asymptotic term by term. Requires y > 0, x != 0. */
SeriesEvaluation zeta_k_asymptotic(unsigned k, const Rational &y, const GaussianRational &x, unsigned max_terms);

/// Terms (-1)^n B_n(a - ib) ((1+ib)^(n+1) - (ib)^(n+1)) / (ib - b^2)^(n+1),
/// n = 0..max_terms (formally 1/a^2). Requires a > 0 and b > 1.
SeriesEvaluation reciprocal_square_series(const Rational &a, const Rational &b, unsigned max_terms);

} // namespace bernmat

#endif
