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

#ifndef BERNMAT_VERIFY_HPP
#define BERNMAT_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bernmat/rational.hpp"

namespace bernmat {

/// Exact identities that can be swept over an index range.
enum class Identity {
    Ey1,        // B_m(a) as a double Stirling sum
    AfI2,       // array-polynomial sum vs the shifted addition formula
    AfI01,      // B_m(a) through S1, B_v and array polynomials
    Dn2,        // sum_v S1(n,v) B_v = (-1)^n n!/(n+1)
    Derivative, // B_n'(x) = n B_{n-1}(x)
};

/// "ey1", "af-i2", "af-i01", "dn2", "derivative".
std::string_view identity_name(Identity id);
std::optional<Identity> identity_from_name(std::string_view name);

struct VerifyReport {
    std::string name;
    std::size_t passed = 0;
    std::size_t total = 0;
    std::vector<std::string> failures;

    bool ok() const { return passed == total; }
};

/// Reproducible sample rationals p/q with |p| <= 50, 1 <= q <= 20.
std::vector<Rational> sample_rationals(std::size_t count, std::uint64_t seed);

/// Runs every case of the sweep and compares both sides exactly.
/**
 * Index ranges: dn2 and af-i01 use 0..max_m, ey1 and derivative 1..max_m,
 * af-i2 0..max_m. The a-dependent identities run each index at every sample
 * point; af-i2 pairs sample k with sample (k+1) mod count as (a, b). A case
 * of af-i2 passes only when both sides also equal B_m(a) (real).
 */
VerifyReport verify_identity(Identity id, unsigned max_m, std::size_t samples = 20, std::uint64_t seed = 1);

} // namespace bernmat

#endif
