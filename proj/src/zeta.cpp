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

#include "bernmat/zeta.hpp"

#include "bernmat/combinatorics.hpp"

namespace bernmat {

SeriesEvaluation SeriesEvaluation::from_terms(std::vector<GaussianRational> terms)
{
    SeriesEvaluation ev;
    ev.partial_sums.reserve(terms.size());
    GaussianRational acc;
    Rational best;
    for (std::size_t n = 0; n < terms.size(); ++n) {
        acc += terms[n];
        ev.partial_sums.push_back(acc);
        Rational norm = terms[n].norm();
        if (n == 0 || norm < best) {
            best = norm;
            ev.optimal_index = n;
        }
    }
    ev.terms = std::move(terms);
    if (!ev.partial_sums.empty())
        ev.value_at_optimum = ev.partial_sums[ev.optimal_index];
    return ev;
}

namespace {

// sum_{n=lo}^{hi-1} 1/(n q + p)^s as an unreduced fraction (num, den),
// by binary splitting.
std::pair<Integer, Integer> reciprocal_power_sum(unsigned long lo, unsigned long hi, const Integer &p,
                                                 const Integer &q, unsigned s)
{
    if (hi - lo == 1) {
        Integer base = q * lo + p, den;
        mpz_pow_ui(den.get_mpz_t(), base.get_mpz_t(), s);
        return {Integer(1), den};
    }
    unsigned long mid = lo + (hi - lo) / 2;
    auto [ln, ld] = reciprocal_power_sum(lo, mid, p, q, s);
    auto [rn, rd] = reciprocal_power_sum(mid, hi, p, q, s);
    return {Integer(ln * rd + rn * ld), Integer(ld * rd)};
}

// int_{x}^{inf} dt/(t+a)^s = (x+a)^(1-s)/(s-1)
Rational tail_integral(unsigned s, const Rational &a, unsigned long x)
{
    return pow(Rational(Integer(x)) + a, 1 - static_cast<long>(s)) / Rational(static_cast<long>(s - 1));
}

Rational bracket_width(unsigned s, const Rational &a, unsigned long m)
{
    return tail_integral(s, a, m) - tail_integral(s, a, m + 1);
}

} // namespace

HurwitzBracket hurwitz_zeta_bracket(unsigned s, const Rational &a, unsigned digits)
{
    if (s < 2)
        throw DomainError("hurwitz zeta reference needs s >= 2");
    if (a.sign() <= 0)
        throw DomainError("hurwitz zeta reference needs a > 0");
    const Rational eps = pow(Rational(10), -static_cast<long>(digits));

    unsigned long hi = 1;
    while (!(bracket_width(s, a, hi) < eps))
        hi *= 2;
    unsigned long lo = 0;
    if (!(bracket_width(s, a, lo) < eps)) {
        // invariant: width(lo) >= eps > width(hi)
        while (hi - lo > 1) {
            unsigned long mid = lo + (hi - lo) / 2;
            if (bracket_width(s, a, mid) < eps)
                hi = mid;
            else
                lo = mid;
        }
    } else {
        hi = 0;
    }
    const unsigned long cutoff = hi;

    auto [num, den] = reciprocal_power_sum(0, cutoff + 1, a.numerator(), a.denominator(), s);
    Integer qs;
    mpz_pow_ui(qs.get_mpz_t(), a.denominator().get_mpz_t(), s);
    Rational partial(Integer(num * qs), den);

    HurwitzBracket br;
    br.lower = partial + tail_integral(s, a, cutoff + 1);
    br.upper = partial + tail_integral(s, a, cutoff);
    br.cutoff = cutoff;
    return br;
}

std::string hurwitz_zeta_reference(unsigned s, const Rational &a, unsigned digits)
{
    return to_decimal(hurwitz_zeta_bracket(s, a, digits).midpoint(), digits);
}

std::vector<GaussianRational> bernoulli_values(const GaussianRational &z, unsigned n)
{
    auto b = bernoulli_numbers(n);
    std::vector<GaussianRational> zp(n + 1);
    zp[0] = GaussianRational(1);
    for (unsigned k = 1; k <= n; ++k)
        zp[k] = zp[k - 1] * z;
    std::vector<GaussianRational> out(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
        GaussianRational acc;
        for (unsigned v = 0; v <= m; ++v)
            if (!b[v].is_zero())
                acc += GaussianRational(Rational(binomial(m, v)) * b[v]) * zp[m - v];
        out[m] = std::move(acc);
    }
    return out;
}

std::pair<Rational, Rational> identity_Ey1(unsigned m, const Rational &a)
{
    Rational lhs = bernoulli_polynomial(m)(a);
    auto s2 = stirling2_table(m);
    Rational rhs(0);
    for (unsigned v = 0; v <= m; ++v) {
        Rational inner(0);
        for (unsigned n = 1; n <= v + 1; ++n) {
            const Integer &s = s2[v][n - 1];
            if (s == 0)
                continue;
            Rational t(Integer(factorial(n - 1) * s), Integer(n));
            inner += (n % 2 == 1) ? t : -t;
        }
        rhs += Rational(binomial(m, v)) * pow(a, m - v) * inner;
    }
    return {lhs, rhs};
}

std::pair<GaussianRational, GaussianRational> identity_afI2(unsigned m, const Rational &a, const Rational &b)
{
    GaussianRational lhs;
    for (unsigned n = 1; n <= m + 1; ++n) {
        Rational weight(factorial(n - 1), Integer(n));
        if (n % 2 == 0)
            weight = -weight;
        lhs += GaussianRational(weight * array_polynomial(n - 1, m)(a));
    }
    const GaussianRational ib(Rational(0), b);
    auto bv = bernoulli_values(GaussianRational(a, -b), m);
    GaussianRational rhs;
    GaussianRational ib_pow(1); // (ib)^(m-v), v descending
    for (unsigned k = 0; k <= m; ++k) {
        unsigned v = m - k;
        rhs += GaussianRational(Rational(binomial(m, v))) * ib_pow * bv[v];
        ib_pow *= ib;
    }
    return {lhs, rhs};
}

std::pair<Rational, Rational> identity_afI01(unsigned m, const Rational &a)
{
    Rational lhs = bernoulli_polynomial(m)(a);
    auto b = bernoulli_numbers(m);
    auto s1 = stirling1_table(m);
    Rational rhs(0);
    for (unsigned n = 0; n <= m; ++n) {
        Rational inner(0);
        for (unsigned v = 0; v <= n; ++v)
            inner += Rational(s1[n][v]) * b[v];
        if (!inner.is_zero())
            rhs += inner * array_polynomial(n, m)(a);
    }
    return {lhs, rhs};
}

std::pair<Rational, Rational> identity_dn2(unsigned n)
{
    auto b = bernoulli_numbers(n);
    auto s1 = stirling1_table(n);
    Rational lhs(0);
    for (unsigned v = 0; v <= n; ++v)
        lhs += Rational(s1[n][v]) * b[v];
    Rational rhs(factorial(n), Integer(n + 1));
    if (n % 2 == 1)
        rhs = -rhs;
    return {lhs, rhs};
}

SeriesEvaluation zeta2_asymptotic(const Rational &a, const Rational &b, unsigned max_terms)
{
    if (a.sign() <= 0 || b.sign() <= 0)
        throw DomainError("zeta2_asymptotic needs a > 0 and b > 0");
    auto bv = bernoulli_values(GaussianRational(a, -b), max_terms);
    std::vector<GaussianRational> terms;
    terms.reserve(max_terms + 1);
    Rational b_pow = b; // b^(n+1)
    for (unsigned n = 0; n <= max_terms; ++n) {
        terms.push_back(i_pow(static_cast<long>(n) - 1) * bv[n] / GaussianRational(b_pow));
        b_pow *= b;
    }
    return SeriesEvaluation::from_terms(std::move(terms));
}

SeriesEvaluation zeta_k_asymptotic(unsigned k, const Rational &y, const GaussianRational &x, unsigned max_terms)
{
    if (y.sign() <= 0)
        throw DomainError("zeta_k_asymptotic needs y > 0");
    if (x.is_zero())
        throw DomainError("zeta_k_asymptotic needs x != 0");
    Rational prefactor(Integer(1), factorial(k + 1));
    if (k % 2 == 1)
        prefactor = -prefactor;
    std::vector<GaussianRational> bv;
    if (max_terms >= k)
        bv = bernoulli_values(GaussianRational(y) - x, max_terms - k);

    std::vector<GaussianRational> terms;
    terms.reserve(max_terms + 1);
    const GaussianRational x_inv = GaussianRational(1) / x;
    GaussianRational x_inv_pow = x_inv; // x^-(n+1)
    for (unsigned n = 0; n <= max_terms; ++n) {
        if (n < k) {
            terms.emplace_back();
        } else {
            // n!/(n-k)!
            Integer falling(1);
            for (unsigned j = n - k + 1; j <= n; ++j)
                falling *= j;
            Rational scale = prefactor * Rational(falling);
            if (n % 2 == 1)
                scale = -scale;
            terms.push_back(GaussianRational(scale) * x_inv_pow * bv[n - k]);
        }
        x_inv_pow *= x_inv;
    }
    return SeriesEvaluation::from_terms(std::move(terms));
}

SeriesEvaluation reciprocal_square_series(const Rational &a, const Rational &b, unsigned max_terms)
{
    if (a.sign() <= 0)
        throw DomainError("reciprocal_square_series needs a > 0");
    if (!(b > Rational(1)))
        throw DomainError("reciprocal_square_series needs b > 1");
    auto bv = bernoulli_values(GaussianRational(a, -b), max_terms);
    const GaussianRational ib(Rational(0), b);
    const GaussianRational one_ib = GaussianRational(1) + ib;
    const GaussianRational den = ib - GaussianRational(b * b);

    std::vector<GaussianRational> terms;
    terms.reserve(max_terms + 1);
    GaussianRational p1 = one_ib, p2 = ib, pd = den; // (n+1)-th powers
    for (unsigned n = 0; n <= max_terms; ++n) {
        GaussianRational t = bv[n] * (p1 - p2) / pd;
        terms.push_back(n % 2 ? -t : t);
        p1 *= one_ib;
        p2 *= ib;
        pd *= den;
    }
    return SeriesEvaluation::from_terms(std::move(terms));
}

} // namespace bernmat
