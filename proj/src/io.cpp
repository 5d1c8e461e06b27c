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

#include "bernmat/io.hpp"

#include <algorithm>

#include <json.hpp>

namespace bernmat::io {

using json = nlohmann::ordered_json;

namespace {

json parse_json(std::string_view text)
{
    try {
        return json::parse(text);
    } catch (const json::exception &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Rational rational_from_json(const json &v)
{
    if (v.is_string())
        return Rational::parse(v.get<std::string>());
    if (v.is_number_integer())
        return Rational(v.get<long>());
    throw ParseError("expected a rational string, got " + v.dump());
}

GaussianRational gaussian_from_json(const json &v)
{
    if (!v.is_string())
        throw ParseError("expected a gaussian rational string, got " + v.dump());
    return GaussianRational::parse(v.get<std::string>());
}

const json &member(const json &obj, const char *key)
{
    if (!obj.is_object() || !obj.contains(key))
        throw ParseError(std::string("missing JSON field '") + key + "'");
    return obj.at(key);
}

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = text.find(sep, start);
        out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

std::string_view strip(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

json gaussian_array(const std::vector<GaussianRational> &v)
{
    json arr = json::array();
    for (const auto &z : v)
        arr.push_back(z.to_string());
    return arr;
}

} // namespace

std::string matrix_to_json(const RationalMatrix &m)
{
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(m(i, j).to_string());
        entries.push_back(std::move(row));
    }
    json doc;
    doc["rows"] = m.rows();
    doc["cols"] = m.cols();
    doc["entries"] = std::move(entries);
    return doc.dump() + "\n";
}

RationalMatrix matrix_from_json(std::string_view text)
{
    json doc = parse_json(text);
    const json &rows_v = member(doc, "rows"), &cols_v = member(doc, "cols"), &entries = member(doc, "entries");
    if (!rows_v.is_number_unsigned() || !cols_v.is_number_unsigned() || !entries.is_array())
        throw ParseError("matrix JSON needs unsigned rows/cols and an entries array");
    auto rows = rows_v.get<std::size_t>(), cols = cols_v.get<std::size_t>();
    if (entries.size() != rows)
        throw ParseError("matrix JSON: entries has " + std::to_string(entries.size()) + " rows, expected " +
                         std::to_string(rows));
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!entries[i].is_array() || entries[i].size() != cols)
            throw ParseError("matrix JSON: row " + std::to_string(i) + " does not have " + std::to_string(cols) +
                             " entries");
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rational_from_json(entries[i][j]);
    }
    return m;
}

std::string matrix_to_csv(const RationalMatrix &m)
{
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j)
                out += ',';
            out += m(i, j).to_string();
        }
        out += '\n';
    }
    return out;
}

RationalMatrix matrix_from_csv(std::string_view text)
{
    std::vector<std::vector<Rational>> rows;
    for (auto line : split(text, '\n')) {
        line = strip(line);
        if (line.empty())
            continue;
        std::vector<Rational> row;
        for (auto cell : split(line, ','))
            row.push_back(Rational::parse(strip(cell)));
        rows.push_back(std::move(row));
    }
    try {
        return RationalMatrix::from_rows(rows);
    } catch (const DomainError &e) {
        throw ParseError(std::string("CSV matrix: ") + e.what());
    }
}

std::string matrix_to_text(const RationalMatrix &m)
{
    std::vector<std::size_t> width(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            width[j] = std::max(width[j], m(i, j).to_string().size());
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::string cell = m(i, j).to_string();
            if (j)
                out += "  ";
            out.append(width[j] - cell.size(), ' ');
            out += cell;
        }
        out += '\n';
    }
    return out;
}

std::string polynomial_to_json(const RationalPolynomial &p)
{
    json coeffs = json::array();
    for (const auto &c : p.coeffs())
        coeffs.push_back(c.to_string());
    json doc;
    doc["coeffs"] = std::move(coeffs);
    return doc.dump() + "\n";
}

RationalPolynomial polynomial_from_json(std::string_view text)
{
    json doc = parse_json(text);
    const json &coeffs = member(doc, "coeffs");
    if (!coeffs.is_array())
        throw ParseError("polynomial JSON: coeffs must be an array");
    std::vector<Rational> c;
    for (const auto &v : coeffs)
        c.push_back(rational_from_json(v));
    return RationalPolynomial(std::move(c));
}

SeriesReport make_series_report(SeriesEvaluation evaluation, const Rational &reference, unsigned digits)
{
    SeriesReport r;
    r.reference = to_decimal(reference, digits);
    if (!evaluation.terms.empty()) {
        GaussianRational diff = evaluation.value_at_optimum - GaussianRational(reference);
        r.abs_error_at_optimum = sqrt_to_decimal(diff.norm(), digits);
        r.minimal_term_abs = sqrt_to_decimal(evaluation.minimal_term_norm(), digits);
    }
    r.evaluation = std::move(evaluation);
    return r;
}

std::string series_to_json(const SeriesReport &report)
{
    const auto &ev = report.evaluation;
    json doc;
    doc["terms"] = gaussian_array(ev.terms);
    doc["partial_sums"] = gaussian_array(ev.partial_sums);
    doc["optimal_index"] = ev.optimal_index;
    doc["value"] = ev.value_at_optimum.to_string();
    doc["reference"] = report.reference;
    doc["abs_error_at_optimum"] = report.abs_error_at_optimum;
    doc["minimal_term_abs"] = report.minimal_term_abs;
    return doc.dump(2) + "\n";
}

SeriesReport series_from_json(std::string_view text)
{
    json doc = parse_json(text);
    SeriesReport r;
    auto read_list = [&](const char *key) {
        const json &arr = member(doc, key);
        if (!arr.is_array())
            throw ParseError(std::string("series JSON: '") + key + "' must be an array");
        std::vector<GaussianRational> out;
        for (const auto &v : arr)
            out.push_back(gaussian_from_json(v));
        return out;
    };
    r.evaluation.terms = read_list("terms");
    r.evaluation.partial_sums = read_list("partial_sums");
    const json &idx = member(doc, "optimal_index");
    if (!idx.is_number_unsigned())
        throw ParseError("series JSON: optimal_index must be unsigned");
    r.evaluation.optimal_index = idx.get<std::size_t>();
    r.evaluation.value_at_optimum = gaussian_from_json(member(doc, "value"));
    auto read_string = [&](const char *key) {
        const json &v = member(doc, key);
        if (!v.is_string())
            throw ParseError(std::string("series JSON: '") + key + "' must be a string");
        return v.get<std::string>();
    };
    r.reference = read_string("reference");
    r.abs_error_at_optimum = read_string("abs_error_at_optimum");
    r.minimal_term_abs = read_string("minimal_term_abs");
    return r;
}

std::vector<Rational> parse_rational_list(std::string_view text)
{
    std::vector<Rational> out;
    if (strip(text).empty())
        return out;
    for (auto cell : split(text, ','))
        out.push_back(Rational::parse(strip(cell)));
    return out;
}

} // namespace bernmat::io
