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

#ifndef BERNMAT_SERIES_HPP
#define BERNMAT_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bernmat/errors.hpp"
#include "bernmat/rational.hpp"

namespace bernmat {

/// Formal power series c_0 + c_1 t + ... + c_N t^N, taken mod t^(N+1).
/**
 * Used as a brute-force oracle: generating functions are built from the
 * three elementary series below with products, powers and unit quotients,
 * and their coefficients are compared against the closed-form generators.
 * Binary operations truncate to the smaller order of the two operands.
 */
template <class F>
class TruncatedSeries {
public:
    using value_type = F;

    /// The zero series of the given order.
    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1, F(0)) {}

    /// Takes ownership of c_0..c_N. Throws DomainError on an empty list.
    explicit TruncatedSeries(std::vector<F> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty())
            throw DomainError("truncated series needs at least one coefficient");
    }

    static TruncatedSeries constant(F c, std::size_t order)
    {
        TruncatedSeries s(order);
        s.coeffs_[0] = std::move(c);
        return s;
    }

    static TruncatedSeries one(std::size_t order) { return constant(F(1), order); }

    /// e^t - 1
    static TruncatedSeries exp_minus_one(std::size_t order)
    {
        TruncatedSeries s(order);
        F term(1);
        for (std::size_t k = 1; k <= order; ++k) {
            term /= F(static_cast<long>(k));
            s.coeffs_[k] = term;
        }
        return s;
    }

    /// e^(x t)
    static TruncatedSeries exp_linear(const F &x, std::size_t order)
    {
        TruncatedSeries s(order);
        F term(1);
        s.coeffs_[0] = term;
        for (std::size_t k = 1; k <= order; ++k) {
            term *= x;
            term /= F(static_cast<long>(k));
            s.coeffs_[k] = term;
        }
        return s;
    }

    /// log(1 + t)
    static TruncatedSeries log_one_plus(std::size_t order)
    {
        TruncatedSeries s(order);
        for (std::size_t k = 1; k <= order; ++k) {
            F c = F(1) / F(static_cast<long>(k));
            s.coeffs_[k] = (k % 2 == 0) ? -c : c;
        }
        return s;
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const std::vector<F> &coeffs() const noexcept { return coeffs_; }
    const F &operator[](std::size_t k) const { return coeffs_.at(k); }

    TruncatedSeries truncated(std::size_t order) const
    {
        std::size_t n = std::min(order, this->order());
        return TruncatedSeries(std::vector<F>(coeffs_.begin(), coeffs_.begin() + n + 1));
    }

    /// f / t, defined when c_0 == 0; the order drops by one.
    TruncatedSeries divided_by_t() const
    {
        if (!(coeffs_[0] == F(0)))
            throw DomainError("series with nonzero constant term is not divisible by t");
        if (order() == 0)
            throw DomainError("dividing an order-0 series by t leaves no coefficients");
        return TruncatedSeries(std::vector<F>(coeffs_.begin() + 1, coeffs_.end()));
    }

    friend TruncatedSeries operator+(const TruncatedSeries &f, const TruncatedSeries &g)
    {
        std::size_t n = std::min(f.order(), g.order());
        TruncatedSeries r(n);
        for (std::size_t k = 0; k <= n; ++k)
            r.coeffs_[k] = f.coeffs_[k] + g.coeffs_[k];
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries &f, const TruncatedSeries &g)
    {
        std::size_t n = std::min(f.order(), g.order());
        TruncatedSeries r(n);
        for (std::size_t k = 0; k <= n; ++k)
            r.coeffs_[k] = f.coeffs_[k] - g.coeffs_[k];
        return r;
    }

    // Cauchy product.
    friend TruncatedSeries operator*(const TruncatedSeries &f, const TruncatedSeries &g)
    {
        std::size_t n = std::min(f.order(), g.order());
        TruncatedSeries r(n);
        for (std::size_t i = 0; i <= n; ++i) {
            if (f.coeffs_[i] == F(0))
                continue;
            for (std::size_t j = 0; i + j <= n; ++j)
                r.coeffs_[i + j] += f.coeffs_[i] * g.coeffs_[j];
        }
        return r;
    }

    friend TruncatedSeries operator*(const F &c, const TruncatedSeries &f)
    {
        TruncatedSeries r = f;
        for (auto &x : r.coeffs_)
            x *= c;
        return r;
    }

    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

private:
    std::vector<F> coeffs_;
};

template <class F>
TruncatedSeries<F> pow(const TruncatedSeries<F> &f, unsigned exponent)
{
    TruncatedSeries<F> result = TruncatedSeries<F>::one(f.order());
    for (unsigned k = 0; k < exponent; ++k)
        result = result * f;
    return result;
}

/// h with h * g == f (mod t^(N+1)), by forward substitution.
/** Requires g to have a nonzero constant term; throws DomainError otherwise. */
template <class F>
TruncatedSeries<F> div_unit(const TruncatedSeries<F> &f, const TruncatedSeries<F> &g)
{
    if (g[0] == F(0))
        throw DomainError("series division by a non-unit (zero constant term)");
    std::size_t n = std::min(f.order(), g.order());
    std::vector<F> h(n + 1, F(0));
    for (std::size_t k = 0; k <= n; ++k) {
        F acc = f[k];
        for (std::size_t j = 1; j <= k; ++j)
            acc -= g[j] * h[k - j];
        h[k] = acc / g[0];
    }
    return TruncatedSeries<F>(std::move(h));
}

/// m! * c_m. Throws RangeError when m exceeds the order.
template <class F>
F egf_coefficient(const TruncatedSeries<F> &f, std::size_t m)
{
    if (m > f.order())
        throw RangeError("egf coefficient " + std::to_string(m) + " beyond series order " +
                         std::to_string(f.order()));
    return F(Rational(factorial(m))) * f[m];
}

/// t / (e^t - 1), built as the inverse of the unit (e^t - 1)/t.
template <class F = Rational>
TruncatedSeries<F> bernoulli_generating_series(std::size_t order)
{
    auto unit = TruncatedSeries<F>::exp_minus_one(order + 1).divided_by_t();
    return div_unit(TruncatedSeries<F>::one(order), unit);
}

} // namespace bernmat

#endif
