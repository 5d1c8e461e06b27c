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

#include "bernmat/rational.hpp"

#include <cctype>
#include <ostream>

namespace bernmat {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

Integer parse_integer(std::string_view s, std::string_view whole)
{
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s))
        throw ParseError("not a rational literal: '" + std::string(whole) + "'");
    Integer v(std::string(s), 10);
    return neg ? Integer(-v) : v;
}

// Pow10 as a GMP integer.
Integer pow10(unsigned e)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

// Renders |n| / 10^digits with a decimal point, prefixed by '-' when negative.
std::string fixed_point(const Integer &scaled, unsigned digits, bool negative)
{
    std::string s = Integer(abs(scaled)).get_str();
    if (digits > 0) {
        if (s.size() <= digits)
            s.insert(0, digits + 1 - s.size(), '0');
        s.insert(s.size() - digits, 1, '.');
    }
    if (negative && scaled != 0)
        s.insert(0, 1, '-');
    return s;
}

} // namespace

Rational::Rational(const Integer &num, const Integer &den) : v_(num, den)
{
    if (den == 0)
        throw DomainError("rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text, text));
    Integer num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text))
        throw ParseError("not a rational literal: '" + std::string(text) + "'");
    Integer den(std::string(den_text), 10);
    if (den == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.is_zero())
        throw DomainError("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::to_string() const
{
    if (is_integer())
        return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational pow(const Rational &p, long exponent)
{
    if (exponent < 0) {
        if (p.is_zero())
            throw DomainError("zero raised to a negative power");
        return pow(Rational(1) / p, -exponent);
    }
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), p.raw().get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), p.raw().get_den_mpz_t(), static_cast<unsigned long>(exponent));
    // Powers of coprime integers stay coprime.
    mpq_class r;
    mpq_set_num(r.get_mpq_t(), num.get_mpz_t());
    mpq_set_den(r.get_mpq_t(), den.get_mpz_t());
    return Rational(r);
}

Rational abs(const Rational &p) { return p.sign() < 0 ? -p : p; }

std::ostream &operator<<(std::ostream &os, const Rational &q) { return os << q.to_string(); }

GaussianRational &GaussianRational::operator*=(const GaussianRational &o)
{
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational &GaussianRational::operator/=(const GaussianRational &o)
{
    if (o.is_zero())
        throw DomainError("gaussian rational division by zero");
    Rational n = o.norm();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

GaussianRational GaussianRational::parse(std::string_view text)
{
    if (text.empty())
        throw ParseError("empty gaussian rational literal");
    if (text.back() != 'i')
        return GaussianRational(Rational::parse(text));
    std::string body(text.substr(0, text.size() - 1));
    if (body.empty() || body.back() == '+' || body.back() == '-')
        body += '1'; // bare "i", "-i", "2+i"
    else if (body.back() == '*')
        body.pop_back();
    else
        throw ParseError("not a gaussian rational literal: '" + std::string(text) + "'");
    // Split at the last sign that is not the leading one.
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos)
        return {Rational(0), Rational::parse(body)};
    Rational re = Rational::parse(std::string_view(body).substr(0, split));
    std::string_view im_text = std::string_view(body).substr(split);
    if (im_text.front() == '+')
        im_text.remove_prefix(1);
    return {re, Rational::parse(im_text)};
}

std::string GaussianRational::to_string() const
{
    std::string s = re_.to_string();
    if (im_.sign() < 0)
        s += im_.to_string();
    else
        s += "+" + im_.to_string();
    return s + "*i";
}

GaussianRational pow(const GaussianRational &z, long exponent)
{
    if (exponent < 0) {
        if (z.is_zero())
            throw DomainError("zero raised to a negative power");
        return pow(GaussianRational(1) / z, -exponent);
    }
    GaussianRational result(1), base = z;
    auto e = static_cast<unsigned long>(exponent);
    while (e) {
        if (e & 1u)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

GaussianRational i_pow(long k)
{
    switch (((k % 4) + 4) % 4) {
    case 0:
        return {Rational(1), Rational(0)};
    case 1:
        return {Rational(0), Rational(1)};
    case 2:
        return {Rational(-1), Rational(0)};
    default:
        return {Rational(0), Rational(-1)};
    }
}

std::ostream &operator<<(std::ostream &os, const GaussianRational &z) { return os << z.to_string(); }

Integer factorial(unsigned long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned long n, long k)
{
    if (k < 0 || static_cast<unsigned long>(k) > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

std::string to_decimal(const Rational &q, unsigned digits)
{
    Integer num = abs(q.numerator()) * pow10(digits);
    const Integer den = q.denominator();
    Integer quot, rem;
    mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Integer twice = rem * 2;
    int c = cmp(twice, den);
    if (c > 0 || (c == 0 && mpz_odd_p(quot.get_mpz_t())))
        quot += 1;
    return fixed_point(quot, digits, q.sign() < 0);
}

std::pair<std::string, std::string> to_decimal(const GaussianRational &z, unsigned digits)
{
    return {to_decimal(z.re(), digits), to_decimal(z.im(), digits)};
}

std::string sqrt_to_decimal(const Rational &q, unsigned digits)
{
    if (q.sign() < 0)
        throw DomainError("square root of a negative rational");
    // nearest integer to sqrt(X) is floor((isqrt(floor(4X)) + 1) / 2)
    Integer scaled = q.numerator() * pow10(2 * digits) * 4;
    Integer floor4x;
    mpz_fdiv_q(floor4x.get_mpz_t(), scaled.get_mpz_t(), q.denominator().get_mpz_t());
    Integer root;
    mpz_sqrt(root.get_mpz_t(), floor4x.get_mpz_t());
    Integer k = root + 1;
    mpz_fdiv_q_2exp(k.get_mpz_t(), k.get_mpz_t(), 1);
    return fixed_point(k, digits, false);
}

} // namespace bernmat
