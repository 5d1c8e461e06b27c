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

#include "bernmat/verify.hpp"

#include <random>

#include "bernmat/combinatorics.hpp"
#include "bernmat/zeta.hpp"

namespace bernmat {

std::string_view identity_name(Identity id)
{
    switch (id) {
    case Identity::Ey1:
        return "ey1";
    case Identity::AfI2:
        return "af-i2";
    case Identity::AfI01:
        return "af-i01";
    case Identity::Dn2:
        return "dn2";
    case Identity::Derivative:
        return "derivative";
    }
    return "?";
}

std::optional<Identity> identity_from_name(std::string_view name)
{
    for (auto id : {Identity::Ey1, Identity::AfI2, Identity::AfI01, Identity::Dn2, Identity::Derivative})
        if (identity_name(id) == name)
            return id;
    return std::nullopt;
}

std::vector<Rational> sample_rationals(std::size_t count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 20);
    std::vector<Rational> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        long p = num(rng);
        long q = den(rng);
        out.emplace_back(Integer(p), Integer(q));
    }
    return out;
}

namespace {

template <class T>
void record(VerifyReport &r, bool ok, const std::string &label, const T &lhs, const T &rhs)
{
    ++r.total;
    if (ok)
        ++r.passed;
    else
        r.failures.push_back(label + ": lhs " + lhs.to_string() + " != rhs " + rhs.to_string());
}

} // namespace

VerifyReport verify_identity(Identity id, unsigned max_m, std::size_t samples, std::uint64_t seed)
{
    VerifyReport r;
    r.name = std::string(identity_name(id));
    auto pts = sample_rationals(samples, seed);

    switch (id) {
    case Identity::Dn2:
        for (unsigned n = 0; n <= max_m; ++n) {
            auto [lhs, rhs] = identity_dn2(n);
            record(r, lhs == rhs, "n=" + std::to_string(n), lhs, rhs);
        }
        break;
    case Identity::Derivative:
        for (unsigned n = 1; n <= max_m; ++n) {
            auto lhs = bernoulli_polynomial(n).derivative();
            auto rhs = Rational(static_cast<long>(n)) * bernoulli_polynomial(n - 1);
            record(r, lhs == rhs, "n=" + std::to_string(n), lhs, rhs);
        }
        break;
    case Identity::Ey1:
        for (unsigned m = 1; m <= max_m; ++m)
            for (const auto &a : pts) {
                auto [lhs, rhs] = identity_Ey1(m, a);
                record(r, lhs == rhs, "m=" + std::to_string(m) + " a=" + a.to_string(), lhs, rhs);
            }
        break;
    case Identity::AfI01:
        for (unsigned m = 0; m <= max_m; ++m)
            for (const auto &a : pts) {
                auto [lhs, rhs] = identity_afI01(m, a);
                record(r, lhs == rhs, "m=" + std::to_string(m) + " a=" + a.to_string(), lhs, rhs);
            }
        break;
    case Identity::AfI2:
        for (unsigned m = 0; m <= max_m; ++m)
            for (std::size_t k = 0; k < pts.size(); ++k) {
                const Rational &a = pts[k];
                const Rational &b = pts[(k + 1) % pts.size()];
                auto [lhs, rhs] = identity_afI2(m, a, b);
                GaussianRational expected(bernoulli_polynomial(m)(a));
                record(r, lhs == rhs && lhs == expected,
                       "m=" + std::to_string(m) + " a=" + a.to_string() + " b=" + b.to_string(), lhs, rhs);
            }
        break;
    }
    return r;
}

} // namespace bernmat
