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

#ifndef BERNMAT_POLYNOMIAL_HPP
#define BERNMAT_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "bernmat/rational.hpp"

namespace bernmat {

/// Dense univariate polynomial, coefficient k multiplies x^k.
/**
 * Always trimmed: a nonzero polynomial has a nonzero leading coefficient and
 * the zero polynomial has no coefficients at all.
 */
template <class F>
class Polynomial {
public:
    using value_type = F;

    Polynomial() = default;
    explicit Polynomial(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<F> coeffs) : coeffs_(coeffs) { trim(); }

    static Polynomial constant(F c) { return Polynomial(std::vector<F>{std::move(c)}); }

    /// c * x^k
    static Polynomial monomial(std::size_t k, F c = F(1))
    {
        std::vector<F> v(k + 1, F(0));
        v[k] = std::move(c);
        return Polynomial(std::move(v));
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

    /// Zero past the degree.
    F coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : F(0); }
    const std::vector<F> &coeffs() const noexcept { return coeffs_; }

    /// Horner evaluation at any point of a ring containing F.
    template <class U>
    U operator()(const U &x) const
    {
        U acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc *= x;
            acc += U(*it);
        }
        return acc;
    }

    Polynomial derivative() const
    {
        if (coeffs_.size() <= 1)
            return {};
        std::vector<F> d(coeffs_.size() - 1, F(0));
        for (std::size_t k = 1; k < coeffs_.size(); ++k)
            d[k - 1] = coeffs_[k] * F(static_cast<long>(k));
        return Polynomial(std::move(d));
    }

    Polynomial &operator+=(const Polynomial &o)
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size(), F(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
            coeffs_[k] += o.coeffs_[k];
        trim();
        return *this;
    }

    Polynomial &operator-=(const Polynomial &o)
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size(), F(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
            coeffs_[k] -= o.coeffs_[k];
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }

    friend Polynomial operator*(const Polynomial &a, const Polynomial &b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<F> r(a.coeffs_.size() + b.coeffs_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(r));
    }

    friend Polynomial operator*(const F &c, Polynomial p)
    {
        for (auto &x : p.coeffs_)
            x *= c;
        p.trim();
        return p;
    }

    friend bool operator==(const Polynomial &, const Polynomial &) = default;

    /// Ascending powers, e.g. "1/6 - x + x^2"; the zero polynomial is "0".
    std::string to_string() const
    {
        if (is_zero())
            return "0";
        std::string out;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            const F &c = coeffs_[k];
            if (c == F(0))
                continue;
            bool negative = c < F(0);
            F mag = negative ? -c : c;
            if (out.empty())
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            if (k == 0)
                out += mag.to_string();
            else {
                if (!(mag == F(1)))
                    out += mag.to_string() + "*";
                out += "x";
                if (k > 1)
                    out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == F(0))
            coeffs_.pop_back();
    }

    std::vector<F> coeffs_;
};

template <class F>
Polynomial<F> pow(const Polynomial<F> &p, unsigned exponent)
{
    Polynomial<F> r = Polynomial<F>::constant(F(1));
    for (unsigned k = 0; k < exponent; ++k)
        r = r * p;
    return r;
}

using RationalPolynomial = Polynomial<Rational>;

} // namespace bernmat

#endif
