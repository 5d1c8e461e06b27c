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


#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bernmat/cli.hpp"
#include "bernmat/combinatorics.hpp"
#include "bernmat/io.hpp"
#include "bernmat/operator.hpp"
#include "bernmat/trace_inverse.hpp"
#include "bernmat/verify.hpp"
#include "bernmat/zeta.hpp"

namespace py = pybind11;
using namespace bernmat;

namespace {

using Strings = std::vector<std::string>;
using StringMatrix = std::vector<Strings>;

Strings to_strings(const std::vector<Rational> &v)
{
    Strings out;
    for (const auto &q : v)
        out.push_back(q.to_string());
    return out;
}

std::vector<Rational> from_strings(const Strings &v)
{
    std::vector<Rational> out;
    for (const auto &s : v)
        out.push_back(Rational::parse(s));
    return out;
}

StringMatrix to_strings(const RationalMatrix &m)
{
    StringMatrix out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i].push_back(m(i, j).to_string());
    return out;
}

RationalMatrix from_strings(const StringMatrix &rows)
{
    std::vector<std::vector<Rational>> r;
    for (const auto &row : rows)
        r.push_back(from_strings(row));
    return RationalMatrix::from_rows(r);
}

OperatorParams params(const Strings &p)
{
    if (p.size() != 4)
        throw ParseError("params must be [a, b, c, d]");
    return {Rational::parse(p[0]), Rational::parse(p[1]), Rational::parse(p[2]), Rational::parse(p[3])};
}

InverseAlgorithm algorithm(const std::string &name)
{
    if (name == "gauss")
        return InverseAlgorithm::Gauss;
    if (name == "cayley-hamilton")
        return InverseAlgorithm::CayleyHamilton;
    if (name == "bell")
        return InverseAlgorithm::Bell;
    throw ParseError("unknown algorithm '" + name + "'");
}

std::vector<Strings> polys(const std::vector<RationalPolynomial> &ps)
{
    std::vector<Strings> out;
    for (const auto &p : ps)
        out.push_back(to_strings(p.coeffs()));
    return out;
}

std::string series_json(const SeriesEvaluation &ev, const Rational &reference, unsigned digits)
{
    return io::series_to_json(io::make_series_report(ev, reference, digits));
}

} // namespace

PYBIND11_MODULE(_bernmat, m)
{
    m.doc() = "Exact Bernoulli, Stirling, operator-matrix and Hurwitz zeta computations";

    auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<SingularMatrixError>(m, "SingularMatrixError", domain.ptr());
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<RangeError>(m, "RangeError", PyExc_IndexError);

    m.def("bernoulli_numbers", [](unsigned n) { return to_strings(bernoulli_numbers(n)); }, py::arg("n"));
    m.def("bernoulli_number_determinant", [](unsigned n) { return bernoulli_number_determinant(n).to_string(); },
          py::arg("n"));
    m.def("bernoulli_numbers_via_Y", [](unsigned n) { return to_strings(bernoulli_numbers_via_Y(n)); },
          py::arg("n"));
    m.def("bernoulli_polynomial", [](unsigned n) { return to_strings(bernoulli_polynomial(n).coeffs()); },
          py::arg("n"));
    m.def("stirling1", [](unsigned n, unsigned k) { return stirling1(n, k).get_str(); }, py::arg("n"), py::arg("k"));
    m.def("stirling2", [](unsigned m_, unsigned n) { return stirling2(m_, n).get_str(); }, py::arg("m"),
          py::arg("n"));
    m.def("complete_bell", [](const Strings &w) { return complete_bell(from_strings(w)).to_string(); },
          py::arg("w"));
    m.def("array_polynomial", [](unsigned v, unsigned m_) { return to_strings(array_polynomial(v, m_).coeffs()); },
          py::arg("v"), py::arg("m"));

    m.def("matrix_M_E", [](unsigned m_, const Strings &p, bool square) { return to_strings(matrix_M_E(m_, params(p), square)); },
          py::arg("m"), py::arg("params"), py::arg("square") = false);
    m.def("matrix_M_Y", [](unsigned n, const Strings &p, bool square) { return to_strings(matrix_M_Y(n, params(p), square)); },
          py::arg("n"), py::arg("params"), py::arg("square") = false);
    m.def("determinant", [](const StringMatrix &a) { return determinant(from_strings(a)).to_string(); },
          py::arg("matrix"));
    m.def("invert",
          [](const StringMatrix &a, const std::string &alg) { return to_strings(invert(from_strings(a), algorithm(alg))); },
          py::arg("matrix"), py::arg("algorithm") = "gauss");

    m.def("family_Q",
          [](unsigned n, const Strings &p, const std::string &alg) { return polys(family_Q(n, params(p), algorithm(alg))); },
          py::arg("n"), py::arg("params"), py::arg("algorithm") = "gauss");
    m.def("family_H",
          [](unsigned n, const std::string &a, const std::string &b) {
              return polys(family_H(n, Rational::parse(a), Rational::parse(b)));
          },
          py::arg("n"), py::arg("a"), py::arg("b"));
    m.def("op_E_poly",
          [](const Strings &poly, const Strings &p) {
              return to_strings(op_E_poly(RationalPolynomial(from_strings(poly)), params(p)).coeffs());
          },
          py::arg("poly"), py::arg("params"));

    m.def("verify_identity",
          [](const std::string &name, unsigned max_m, std::size_t samples, std::uint64_t seed) {
              auto id = identity_from_name(name);
              if (!id)
                  throw ParseError("unknown identity '" + name + "'");
              auto r = verify_identity(*id, max_m, samples, seed);
              py::dict d;
              d["name"] = r.name;
              d["passed"] = r.passed;
              d["total"] = r.total;
              d["failures"] = r.failures;
              return d;
          },
          py::arg("identity"), py::arg("max_m") = 20, py::arg("samples") = 20, py::arg("seed") = 1);

    m.def("hurwitz_zeta_reference",
          [](unsigned s, const std::string &a, unsigned digits) {
              return hurwitz_zeta_reference(s, Rational::parse(a), digits);
          },
          py::arg("s"), py::arg("a"), py::arg("digits"));
    m.def("zeta2_asymptotic_json",
          [](const std::string &a, const std::string &b, unsigned max_terms, unsigned digits) {
              Rational ra = Rational::parse(a);
              return series_json(zeta2_asymptotic(ra, Rational::parse(b), max_terms),
                                 hurwitz_zeta_bracket(2, ra, digits).midpoint(), digits);
          },
          py::arg("a"), py::arg("b"), py::arg("max_terms") = 60, py::arg("digits") = 10);
    m.def("reciprocal_square_series_json",
          [](const std::string &a, const std::string &b, unsigned max_terms, unsigned digits) {
              Rational ra = Rational::parse(a);
              return series_json(reciprocal_square_series(ra, Rational::parse(b), max_terms), Rational(1) / (ra * ra),
                                 digits);
          },
          py::arg("a"), py::arg("b"), py::arg("max_terms") = 60, py::arg("digits") = 10);

    m.def("run_cli",
          [](const Strings &args) {
              std::ostringstream out, err;
              int code = cli::run(args, out, err);
              return py::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"));
}
