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

#ifndef BERNMAT_IO_HPP
#define BERNMAT_IO_HPP

// Text, CSV and JSON renderings of the exact payloads. Rationals are always
// written as "p/q" strings; decimals only appear in the numeric fields of a
// series report. Output is byte-identical for identical values.
//
//   matrix:      {"rows": R, "cols": C, "entries": [["p/q", ...], ...]}
//   polynomial:  {"coeffs": ["p/q", ...]}            (ascending powers)
//   series:      {"terms": [...], "partial_sums": [...], "optimal_index": k,
//                 "value": "...", "reference": "...",
//                 "abs_error_at_optimum": "...", "minimal_term_abs": "..."}

#include <string>
#include <string_view>
#include <vector>

#include "bernmat/matrix.hpp"
#include "bernmat/polynomial.hpp"
#include "bernmat/zeta.hpp"

namespace bernmat::io {

std::string matrix_to_json(const RationalMatrix &m);
/// Throws ParseError on malformed input.
RationalMatrix matrix_from_json(std::string_view text);

/// One row per line, cells "p/q", trailing newline.
std::string matrix_to_csv(const RationalMatrix &m);
RationalMatrix matrix_from_csv(std::string_view text);

/// Right-aligned columns separated by two spaces.
std::string matrix_to_text(const RationalMatrix &m);

std::string polynomial_to_json(const RationalPolynomial &p);
RationalPolynomial polynomial_from_json(std::string_view text);

/// A series evaluation together with the decimal fields reported next to it.
struct SeriesReport {
    SeriesEvaluation evaluation;
    std::string reference;
    std::string abs_error_at_optimum;
    std::string minimal_term_abs;

    friend bool operator==(const SeriesReport &, const SeriesReport &) = default;
};

/// Fills the decimal fields: |value_at_optimum - reference| and the minimal
/// term modulus, both to `digits` places.
SeriesReport make_series_report(SeriesEvaluation evaluation, const Rational &reference, unsigned digits);

std::string series_to_json(const SeriesReport &report);
SeriesReport series_from_json(std::string_view text);

/// Comma-separated list of rationals ("1,-1/2,3"). Throws ParseError.
std::vector<Rational> parse_rational_list(std::string_view text);

} // namespace bernmat::io

#endif
