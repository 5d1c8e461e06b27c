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

#ifndef BERNMAT_PARTITIONS_HPP
#define BERNMAT_PARTITIONS_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace bernmat {

/// Calls visit(k) for every multiplicity vector k = (k_1, ..., k_parts) of
/// non-negative integers with 1*k_1 + 2*k_2 + ... + parts*k_parts == total.
/**
 * k[j-1] holds k_j. Vectors are visited in ascending lexicographic order of
 * (k_1, ..., k_parts). With parts == 0 the only candidate is the empty
 * vector, visited once when total == 0.
 */
template <class Visitor>
void for_each_multiplicity(std::size_t parts, std::size_t total, Visitor &&visit)
{
    std::vector<std::size_t> k(parts, 0);
    if (parts == 0) {
        if (total == 0)
            visit(std::span<const std::size_t>(k));
        return;
    }
    // Depth-first over positions; the last position is forced by what remains.
    auto recurse = [&](auto &self, std::size_t pos, std::size_t remaining) -> void {
        std::size_t weight = pos + 1;
        if (pos + 1 == parts) {
            if (remaining % weight == 0) {
                k[pos] = remaining / weight;
                visit(std::span<const std::size_t>(k));
            }
            k[pos] = 0;
            return;
        }
        for (std::size_t m = 0; m * weight <= remaining; ++m) {
            k[pos] = m;
            self(self, pos + 1, remaining - m * weight);
        }
        k[pos] = 0;
    };
    recurse(recurse, 0, total);
}

} // namespace bernmat

#endif
