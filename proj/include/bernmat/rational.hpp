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

#ifndef BERNMAT_RATIONAL_HPP
#define BERNMAT_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "bernmat/errors.hpp"

namespace bernmat {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

/// Exact rational number.
/**
 * Thin value wrapper around GMP's mpq. Every constructor and every arithmetic
 * result is canonical: the denominator is positive, numerator and
 * denominator are coprime, and zero is 0/1.
 */
class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}
    Rational(int v) : v_(static_cast<long>(v)) {}
    Rational(const Integer &v) : v_(v) {}
    /// Throws DomainError when den == 0.
    Rational(const Integer &num, const Integer &den);
    explicit Rational(const mpq_class &v) : v_(v) { v_.canonicalize(); }

    /// Parses "p", "-p", "p/q" (whitespace not allowed). Throws ParseError.
    static Rational parse(std::string_view text);

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }
    const mpq_class &raw() const noexcept { return v_; }

    bool is_zero() const noexcept { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const noexcept { return sgn(v_); }

    Rational &operator+=(const Rational &o)
    {
        v_ += o.v_;
        return *this;
    }
    Rational &operator-=(const Rational &o)
    {
        v_ -= o.v_;
        return *this;
    }
    Rational &operator*=(const Rational &o)
    {
        v_ *= o.v_;
        return *this;
    }
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    friend Rational operator-(const Rational &a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// "p/q", or "p" when q == 1.
    std::string to_string() const;

    /// Approximate value, for diagnostics only.
    double to_double() const { return v_.get_d(); }

private:
    mpq_class v_;
};

/// Integer power; negative exponents require p != 0.
Rational pow(const Rational &p, long exponent);
Rational abs(const Rational &p);

std::ostream &operator<<(std::ostream &os, const Rational &q);

/// Complex number with rational real and imaginary parts.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(int re) : re_(re) {}
    GaussianRational(long re) : re_(re) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    /// The imaginary unit.
    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    /// Parses "p/q+r/s*i", "p/q-r/s*i", a bare rational, or "r/s*i".
    static GaussianRational parse(std::string_view text);

    const Rational &re() const noexcept { return re_; }
    const Rational &im() const noexcept { return im_; }

    bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const noexcept { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }
    /// re² + im², exact.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational &operator+=(const GaussianRational &o)
    {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational &operator-=(const GaussianRational &o)
    {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational &operator*=(const GaussianRational &o);
    GaussianRational &operator/=(const GaussianRational &o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational &b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational &b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational &b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational &b) { return a /= b; }
    friend GaussianRational operator-(const GaussianRational &a) { return {-a.re_, -a.im_}; }
    friend bool operator==(const GaussianRational &a, const GaussianRational &b) = default;

    /// "p/q+r/s*i" with an explicit sign on the imaginary part, e.g. "1-5*i".
    std::string to_string() const;

private:
    Rational re_;
    Rational im_;
};

/// Power by repeated squaring; negative exponents require z != 0.
GaussianRational pow(const GaussianRational &z, long exponent);

/// i^k for any integer k.
GaussianRational i_pow(long k);

std::ostream &operator<<(std::ostream &os, const GaussianRational &z);

Integer factorial(unsigned long n);

/// Zero when k < 0 or k > n.
Integer binomial(unsigned long n, long k);

/// Fixed-point rendering with `digits` fractional digits, rounded half to
/// even. A value that rounds to zero is printed without a minus sign.
std::string to_decimal(const Rational &q, unsigned digits);
std::pair<std::string, std::string> to_decimal(const GaussianRational &z, unsigned digits);

/// sqrt(q) rendered with `digits` fractional digits, rounded to nearest.
/// Requires q >= 0.
std::string sqrt_to_decimal(const Rational &q, unsigned digits);

} // namespace bernmat

#endif
