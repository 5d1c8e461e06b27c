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

#include "bernmat/cli.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bernmat/combinatorics.hpp"
#include "bernmat/io.hpp"
#include "bernmat/operator.hpp"
#include "bernmat/trace_inverse.hpp"
#include "bernmat/verify.hpp"
#include "bernmat/zeta.hpp"

namespace bernmat::cli {

namespace {

using json = nlohmann::ordered_json;

struct OptionSpec {
    const char *name;
    const char *help;
    const char *default_value; // nullptr: required
    bool flag = false;
};

struct SubcommandSpec {
    Subcommand id;
    const char *name;
    const char *help;
    std::vector<OptionSpec> options;
};

const std::vector<SubcommandSpec> &subcommand_specs()
{
    static const std::vector<SubcommandSpec> specs = {
        {Subcommand::Bernoulli,
         "bernoulli",
         "Print B_0..B_n",
         {{"n", "largest index", nullptr},
          {"method", "recurrence | determinant | operator | y-matrix", "recurrence"}}},
        {Subcommand::Stirling,
         "stirling",
         "Print rows 0..n of a Stirling triangle",
         {{"kind", "1 (signed, first kind) | 2 (second kind)", "2"}, {"n", "last row", nullptr}}},
        {Subcommand::Bell,
         "bell",
         "Evaluate the complete exponential Bell polynomial B_n(w_1..w_n)",
         {{"w", "comma-separated rationals w_1,...,w_n", nullptr}}},
        {Subcommand::Array,
         "array",
         "Print the array polynomial S_v^m(x)",
         {{"v", "block count v", nullptr}, {"m", "degree index m", nullptr}}},
        {Subcommand::Matrix,
         "matrix",
         "Print the operator matrix M_E (rows m) or M(Y_m)",
         {{"kind", "E | Y", "E"},
          {"m", "row count for E, polynomial index for Y", nullptr},
          {"params", "a,b,c,d", "1,0,1,1"},
          {"square", "drop the zero last column (needs c == a)", nullptr, true}}},
        {Subcommand::Inverse,
         "inverse",
         "Invert a matrix read from --input or built from --kind/--m/--params (square form)",
         {{"algorithm", "gauss | cayley-hamilton | bell", "gauss"},
          {"input", "matrix file (.json or .csv)", ""},
          {"kind", "E | Y", "E"},
          {"m", "row count for E, polynomial index for Y", "0"},
          {"params", "a,b,c,d", "1,0,1,1"}}},
        {Subcommand::Family,
         "family",
         "Print Q_0..Q_{n-1}, H_0..H_{n-1} or B_0(x)..B_{n-1}(x)",
         {{"kind", "Q | H | bernoulli", "Q"},
          {"n", "family size", nullptr},
          {"params", "a,b,c,d for Q; a,b for H; unused for bernoulli", "1,0,1,1"},
          {"algorithm", "gauss | cayley-hamilton | bell", "gauss"}}},
        {Subcommand::YPoly,
         "ypoly",
         "Print Y_n(x) = (cx+d)^(n+1) - (ax+b)^(n+1)",
         {{"n", "index", nullptr}, {"params", "a,b,c,d", "1,0,1,1"}}},
        {Subcommand::Derivative,
         "derivative",
         "Print d/dx E[P] for P given by ascending coefficients",
         {{"poly", "comma-separated coefficients c0,c1,...", nullptr}, {"params", "a,b,c,d", "1,0,1,1"}}},
        {Subcommand::Verify,
         "verify",
         "Run an exact identity sweep",
         {{"identity", "ey1 | af-i2 | af-i01 | dn2 | derivative", nullptr},
          {"max-m", "largest index", "20"},
          {"samples", "sample points for the a-dependent identities", "20"},
          {"seed", "sample generator seed", "1"}}},
        {Subcommand::Zeta,
         "zeta",
         "Evaluate a Hurwitz zeta series term by term (JSON report)",
         {{"theorem", "bx13 | bnx4 | af-i0a", "bx13"},
          {"a", "a (y for bnx4), rational > 0", "1"},
          {"b", "b, rational > 0 (> 1 for af-i0a)", "5"},
          {"k", "derivative order for bnx4", "0"},
          {"x", "x for bnx4 as p/q+r/s*i; defaults to i*b", ""},
          {"max-terms", "last term index", "60"}}},
    };
    return specs;
}

unsigned long parse_uint(const std::string &text, const std::string &name)
{
    unsigned long v = 0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size())
        throw ParseError("--" + name + " expects a non-negative integer, got '" + text + "'");
    return v;
}

class Params {
public:
    explicit Params(const CliRequest &req) : req_(req) {}

    const std::string &str(const std::string &key) const
    {
        auto it = req_.parameters.find(key);
        if (it == req_.parameters.end())
            throw ParseError("missing option --" + key);
        return it->second;
    }

    unsigned u(const std::string &key) const
    {
        auto v = parse_uint(str(key), key);
        if (v > 100000)
            throw DomainError("--" + key + " is unreasonably large");
        return static_cast<unsigned>(v);
    }

    Rational q(const std::string &key) const { return Rational::parse(str(key)); }

    bool flag(const std::string &key) const { return req_.parameters.count(key) && str(key) == "true"; }

    std::vector<Rational> list(const std::string &key) const { return io::parse_rational_list(str(key)); }

    OperatorParams op4(const std::string &key = "params") const
    {
        auto v = list(key);
        if (v.size() != 4)
            throw ParseError("--" + key + " expects four rationals a,b,c,d");
        return {v[0], v[1], v[2], v[3]};
    }

private:
    const CliRequest &req_;
};

InverseAlgorithm parse_algorithm(const std::string &s)
{
    if (s == "gauss")
        return InverseAlgorithm::Gauss;
    if (s == "cayley-hamilton")
        return InverseAlgorithm::CayleyHamilton;
    if (s == "bell")
        return InverseAlgorithm::Bell;
    throw ParseError("unknown --algorithm '" + s + "'");
}

template <class T>
std::string join(const std::vector<T> &v, const char *sep)
{
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k)
            out += sep;
        if constexpr (std::is_same_v<T, std::string>)
            out += v[k];
        else
            out += v[k].to_string();
    }
    return out;
}

std::string render_values(const std::vector<Rational> &values, OutputFormat fmt, const std::string &label)
{
    switch (fmt) {
    case OutputFormat::Csv: {
        std::string out;
        for (std::size_t k = 0; k < values.size(); ++k)
            out += std::to_string(k) + "," + values[k].to_string() + "\n";
        return out;
    }
    case OutputFormat::Json: {
        json doc;
        doc["method"] = label;
        doc["values"] = json::array();
        for (const auto &v : values)
            doc["values"].push_back(v.to_string());
        return doc.dump() + "\n";
    }
    default:
        return join(values, ", ") + "\n";
    }
}

std::string render_polynomial(const RationalPolynomial &p, OutputFormat fmt)
{
    switch (fmt) {
    case OutputFormat::Csv:
        return join(p.coeffs(), ",") + "\n";
    case OutputFormat::Json:
        return io::polynomial_to_json(p);
    default:
        return p.to_string() + "\n";
    }
}

std::string render_family(const std::vector<RationalPolynomial> &family, const std::string &name,
                          OutputFormat fmt)
{
    switch (fmt) {
    case OutputFormat::Csv: {
        std::string out;
        for (const auto &p : family)
            out += join(p.coeffs(), ",") + "\n";
        return out;
    }
    case OutputFormat::Json: {
        json doc;
        doc["family"] = name;
        doc["polynomials"] = json::array();
        for (const auto &p : family) {
            json c = json::array();
            for (const auto &x : p.coeffs())
                c.push_back(x.to_string());
            doc["polynomials"].push_back(json{{"coeffs", c}});
        }
        return doc.dump() + "\n";
    }
    default: {
        std::string out;
        for (std::size_t k = 0; k < family.size(); ++k)
            out += name + "_" + std::to_string(k) + " = " + family[k].to_string() + "\n";
        return out;
    }
    }
}

std::string render_matrix(const RationalMatrix &m, OutputFormat fmt)
{
    switch (fmt) {
    case OutputFormat::Csv:
        return io::matrix_to_csv(m);
    case OutputFormat::Json:
        return io::matrix_to_json(m);
    default:
        return io::matrix_to_text(m);
    }
}

RationalMatrix build_matrix(const Params &p, bool square)
{
    const std::string &kind = p.str("kind");
    if (kind == "E")
        return matrix_M_E(p.u("m"), p.op4(), square);
    if (kind == "Y")
        return matrix_M_Y(p.u("m"), p.op4(), square);
    throw ParseError("unknown --kind '" + kind + "' (expected E or Y)");
}

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DomainError("cannot read '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

CliResult run_bernoulli(const Params &p, OutputFormat fmt)
{
    unsigned n = p.u("n");
    const std::string &method = p.str("method");
    std::vector<Rational> values;
    if (method == "recurrence") {
        values = bernoulli_numbers(n);
    } else if (method == "determinant") {
        for (unsigned k = 0; k <= n; ++k)
            values.push_back(bernoulli_number_determinant(k));
    } else if (method == "operator") {
        for (const auto &poly : bernoulli_via_operator(n + 1))
            values.push_back(poly.coefficient(0));
    } else if (method == "y-matrix") {
        values = bernoulli_numbers_via_Y(n);
    } else {
        throw ParseError("unknown --method '" + method + "'");
    }
    return {Ok, render_values(values, fmt, method), {}};
}

CliResult run_stirling(const Params &p, OutputFormat fmt)
{
    const std::string &kind = p.str("kind");
    unsigned n = p.u("n");
    std::vector<std::vector<Integer>> rows;
    if (kind == "1")
        rows = stirling1_table(n);
    else if (kind == "2")
        rows = stirling2_table(n);
    else
        throw ParseError("unknown --kind '" + kind + "' (expected 1 or 2)");
    std::string out;
    if (fmt == OutputFormat::Json) {
        json doc;
        doc["kind"] = std::stoi(kind);
        doc["rows"] = json::array();
        for (const auto &row : rows) {
            json r = json::array();
            for (const auto &v : row)
                r.push_back(v.get_str());
            doc["rows"].push_back(std::move(r));
        }
        return {Ok, doc.dump() + "\n", {}};
    }
    const char *sep = fmt == OutputFormat::Csv ? "," : ", ";
    for (const auto &row : rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k)
                out += sep;
            out += row[k].get_str();
        }
        out += "\n";
    }
    return {Ok, out, {}};
}

CliResult run_bell(const Params &p, OutputFormat fmt)
{
    Rational v = complete_bell(p.list("w"));
    if (fmt == OutputFormat::Json)
        return {Ok, json{{"value", v.to_string()}}.dump() + "\n", {}};
    return {Ok, v.to_string() + "\n", {}};
}

CliResult run_inverse(const Params &p, OutputFormat fmt)
{
    auto algorithm = parse_algorithm(p.str("algorithm"));
    RationalMatrix m;
    const std::string &input = p.str("input");
    if (!input.empty()) {
        std::string text = read_file(input);
        bool csv = input.size() >= 4 && input.substr(input.size() - 4) == ".csv";
        m = csv ? io::matrix_from_csv(text) : io::matrix_from_json(text);
    } else {
        m = build_matrix(p, true);
    }
    return {Ok, render_matrix(invert(m, algorithm), fmt), {}};
}

CliResult run_family(const Params &p, OutputFormat fmt)
{
    const std::string &kind = p.str("kind");
    unsigned n = p.u("n");
    auto algorithm = parse_algorithm(p.str("algorithm"));
    if (kind == "Q")
        return {Ok, render_family(family_Q(n, p.op4(), algorithm), "Q", fmt), {}};
    if (kind == "H") {
        auto v = p.list("params");
        if (v.size() != 2 && v.size() != 4)
            throw ParseError("--params for H expects a,b");
        return {Ok, render_family(family_H(n, v[0], v[1], algorithm), "H", fmt), {}};
    }
    if (kind == "bernoulli")
        return {Ok, render_family(bernoulli_via_operator(n, algorithm), "B", fmt), {}};
    throw ParseError("unknown --kind '" + kind + "' (expected Q, H or bernoulli)");
}

CliResult run_verify(const Params &p, OutputFormat fmt)
{
    auto id = identity_from_name(p.str("identity"));
    if (!id)
        throw ParseError("unknown --identity '" + p.str("identity") + "'");
    auto samples = p.u("samples");
    if (samples == 0)
        throw DomainError("--samples must be positive");
    auto report = verify_identity(*id, p.u("max-m"), samples, parse_uint(p.str("seed"), "seed"));
    std::string out;
    switch (fmt) {
    case OutputFormat::Json: {
        json doc;
        doc["identity"] = report.name;
        doc["passed"] = report.passed;
        doc["total"] = report.total;
        doc["failures"] = report.failures;
        out = doc.dump() + "\n";
        break;
    }
    case OutputFormat::Csv:
        out = report.name + "," + std::to_string(report.passed) + "," + std::to_string(report.total) + "\n";
        break;
    default:
        out = report.name + ": " + std::to_string(report.passed) + "/" + std::to_string(report.total) + " exact\n";
        for (const auto &f : report.failures)
            out += "  FAIL " + f + "\n";
    }
    return {report.ok() ? Ok : VerificationFailure, out, {}};
}

CliResult run_zeta(const Params &p, OutputFormat fmt, unsigned digits)
{
    const std::string &theorem = p.str("theorem");
    Rational a = p.q("a"), b = p.q("b");
    unsigned max_terms = p.u("max-terms");
    SeriesEvaluation ev;
    Rational reference;
    if (theorem == "bx13") {
        ev = zeta2_asymptotic(a, b, max_terms);
        reference = hurwitz_zeta_bracket(2, a, digits).midpoint();
    } else if (theorem == "bnx4") {
        unsigned k = p.u("k");
        GaussianRational x = p.str("x").empty() ? GaussianRational(Rational(0), b) : GaussianRational::parse(p.str("x"));
        ev = zeta_k_asymptotic(k, a, x, max_terms);
        reference = hurwitz_zeta_bracket(k + 2, a, digits).midpoint();
    } else if (theorem == "af-i0a") {
        ev = reciprocal_square_series(a, b, max_terms);
        reference = Rational(1) / (a * a);
    } else {
        throw ParseError("unknown --theorem '" + theorem + "'");
    }
    auto report = io::make_series_report(std::move(ev), reference, digits);
    if (fmt == OutputFormat::Csv) {
        std::string out = "n,term,partial_sum\n";
        for (std::size_t n = 0; n < report.evaluation.terms.size(); ++n)
            out += std::to_string(n) + "," + report.evaluation.terms[n].to_string() + "," +
                   report.evaluation.partial_sums[n].to_string() + "\n";
        return {Ok, out, {}};
    }
    return {Ok, io::series_to_json(report), {}};
}

CliResult dispatch(const CliRequest &req)
{
    Params p(req);
    const auto fmt = req.output_format;
    switch (req.subcommand) {
    case Subcommand::Bernoulli:
        return run_bernoulli(p, fmt);
    case Subcommand::Stirling:
        return run_stirling(p, fmt);
    case Subcommand::Bell:
        return run_bell(p, fmt);
    case Subcommand::Array:
        return {Ok, render_polynomial(array_polynomial(p.u("v"), p.u("m")), fmt), {}};
    case Subcommand::Matrix:
        return {Ok, render_matrix(build_matrix(p, p.flag("square")), fmt), {}};
    case Subcommand::Inverse:
        return run_inverse(p, fmt);
    case Subcommand::Family:
        return run_family(p, fmt);
    case Subcommand::YPoly:
        return {Ok, render_polynomial(y_polynomial(p.u("n"), p.op4()), fmt), {}};
    case Subcommand::Derivative:
        return {Ok, render_polynomial(derivative_E(RationalPolynomial(p.list("poly")), p.op4()), fmt), {}};
    case Subcommand::Verify:
        return run_verify(p, fmt);
    case Subcommand::Zeta:
        return run_zeta(p, fmt, req.digits);
    }
    return {UsageError, {}, "unknown subcommand\n"};
}

} // namespace

std::optional<CliRequest> parse_request(const std::vector<std::string> &args, CliResult &result)
{
    CLI::App app{"Exact Bernoulli, Stirling, operator-matrix and Hurwitz zeta computations", "bernmat"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text", output;
    unsigned digits = 12;
    app.add_option("--format", format, "text | csv | json")->capture_default_str();
    app.add_option("--output", output, "write the result to this file instead of stdout");
    app.add_option("--digits", digits, "fractional digits for decimal fields")->capture_default_str();

    std::map<std::string, std::map<std::string, std::string>> values;
    std::map<std::string, std::map<std::string, bool>> flags;
    std::map<CLI::App *, const SubcommandSpec *> by_app;
    for (const auto &spec : subcommand_specs()) {
        CLI::App *sub = app.add_subcommand(spec.name, spec.help);
        by_app[sub] = &spec;
        for (const auto &opt : spec.options) {
            std::string flag_name = std::string("--") + opt.name;
            if (opt.flag) {
                sub->add_flag(flag_name, flags[spec.name][opt.name], opt.help);
                continue;
            }
            std::string &slot = values[spec.name][opt.name];
            auto *o = sub->add_option(flag_name, slot, opt.help);
            if (opt.default_value)
                slot = opt.default_value, o->capture_default_str();
            else
                o->required();
        }
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    std::ostringstream out, err;
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        result.exit_code = app.exit(e, out, err) == 0 ? Ok : UsageError;
        result.output = out.str();
        result.error = err.str();
        return std::nullopt;
    }

    CliRequest req;
    auto parsed = app.get_subcommands();
    const SubcommandSpec *spec = by_app.at(parsed.front());
    req.subcommand = spec->id;
    req.parameters = values[spec->name];
    for (const auto &[name, on] : flags[spec->name])
        req.parameters[name] = on ? "true" : "false";
    if (format == "text")
        req.output_format = OutputFormat::Text;
    else if (format == "csv")
        req.output_format = OutputFormat::Csv;
    else if (format == "json")
        req.output_format = OutputFormat::Json;
    else {
        result.exit_code = UsageError;
        result.error = "unknown --format '" + format + "'\n";
        return std::nullopt;
    }
    if (!output.empty())
        req.output_path = output;
    req.digits = digits;
    return req;
}

CliResult execute(const CliRequest &request)
{
    try {
        return dispatch(request);
    } catch (const ParseError &e) {
        return {UsageError, {}, std::string("error: ") + e.what() + "\n"};
    } catch (const DomainError &e) {
        return {DomainFailure, {}, std::string("error: ") + e.what() + "\n"};
    } catch (const RangeError &e) {
        return {DomainFailure, {}, std::string("error: ") + e.what() + "\n"};
    } catch (const std::exception &e) {
        return {DomainFailure, {}, std::string("error: ") + e.what() + "\n"};
    }
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CliResult result;
    auto request = parse_request(args, result);
    if (request)
        result = execute(*request);
    err << result.error;
    if (request && request->output_path && !result.output.empty()) {
        std::ofstream file(*request->output_path, std::ios::binary);
        if (!(file << result.output)) {
            err << "error: cannot write '" << *request->output_path << "'\n";
            return DomainFailure;
        }
        return result.exit_code;
    }
    out << result.output;
    return result.exit_code;
}

} // namespace bernmat::cli
