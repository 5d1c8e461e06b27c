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


#include <cstdio>
#include <fstream>
#include <sstream>

#include <doctest.h>

#include "bernmat/cli.hpp"
#include "bernmat/io.hpp"
#include "bernmat/operator.hpp"

using namespace bernmat;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const char *name)
{
    return std::string(BERNMAT_TEST_TMPDIR) + "/" + name;
}

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("documented runs")
    {
        auto b = run({"bernoulli", "--n", "6", "--method", "y-matrix"});
        CHECK(b.code == 0);
        CHECK(b.out == "1, -1/2, 1/6, 0, -1/30, 0, 1/42\n");
        auto q = run({"family", "--kind", "Q", "--n", "2", "--params", "1,0,1,1"});
        CHECK(q.code == 0);
        CHECK(q.out == "Q_0 = 1\nQ_1 = -1/2 + x\n");
        auto v = run({"verify", "--identity", "dn2", "--max-m", "20"});
        CHECK(v.code == 0);
        CHECK(v.out == "dn2: 21/21 exact\n");
    }

    TEST_CASE("every bernoulli method agrees")
    {
        auto ref = run({"bernoulli", "--n", "12"}).out;
        for (const char *m : {"determinant", "operator", "y-matrix"})
            CHECK(run({"bernoulli", "--n", "12", "--method", m}).out == ref);
        CHECK(run({"--format", "csv", "bernoulli", "--n", "2"}).out == "0,1\n1,-1/2\n2,1/6\n");
        CHECK(run({"--format", "json", "bernoulli", "--n", "1"}).out ==
              "{\"method\":\"recurrence\",\"values\":[\"1\",\"-1/2\"]}\n");
    }

    TEST_CASE("other subcommands")
    {
        CHECK(run({"stirling", "--kind", "2", "--n", "3"}).out == "1\n0, 1\n0, 1, 1\n0, 1, 3, 1\n");
        CHECK(run({"bell", "--w", "1,1,1"}).out == "5\n");
        CHECK(run({"array", "--v", "1", "--m", "2"}).out == "1 + 2*x\n");
        CHECK(run({"ypoly", "--n", "1"}).out == "1 + 2*x\n");
        CHECK(run({"derivative", "--poly", "0,1"}).out == "1\n");
        CHECK(run({"--format", "csv", "matrix", "--kind", "E", "--m", "2", "--square"}).out == "1,0\n1/2,1\n");
        CHECK(run({"matrix", "--kind", "Y", "--m", "0", "--params", "1,2,3,5"}).out == "3  2\n");
        CHECK(run({"--format", "csv", "inverse", "--kind", "E", "--m", "3", "--algorithm", "bell"}).out ==
              "1,0,0\n-1/2,1,0\n1/6,-1,1\n");
        CHECK(run({"family", "--kind", "H", "--n", "2", "--params", "2,0"}).out == "H_0 = 1\nH_1 = -1/4 + 1/2*x\n");
        CHECK(run({"family", "--kind", "bernoulli", "--n", "3"}).out ==
              "B_0 = 1\nB_1 = -1/2 + x\nB_2 = 1/6 - x + x^2\n");
        auto z = run({"zeta", "--theorem", "af-i0a", "--a", "2", "--b", "5", "--max-terms", "4", "--digits", "3"});
        CHECK(z.code == 0);
        auto report = io::series_from_json(z.out);
        CHECK(report.reference == "0.250");
        CHECK(report.evaluation.terms.size() == 5);
    }

    TEST_CASE("inverse from a file")
    {
        auto path = temp_path("cli_inverse.json");
        {
            std::ofstream f(path);
            f << io::matrix_to_json(matrix_M_Y(6, OperatorParams::bernoulli(), true));
        }
        auto g = run({"--format", "json", "inverse", "--input", path});
        auto c = run({"--format", "json", "inverse", "--input", path, "--algorithm", "cayley-hamilton"});
        CHECK(g.code == 0);
        CHECK(g.out == c.out);
        CHECK(io::matrix_from_json(g.out).column(0) ==
              std::vector<Rational>{Rational(1), Rational::parse("-1/2"), Rational::parse("1/6"), Rational(0),
                                    Rational::parse("-1/30"), Rational(0), Rational::parse("1/42")});
        std::remove(path.c_str());
        CHECK(run({"inverse", "--input", temp_path("missing.json")}).code == cli::DomainFailure);
    }

    TEST_CASE("usage errors exit 1")
    {
        CHECK(run({}).code == cli::UsageError);
        CHECK(run({"nosuch"}).code == cli::UsageError);
        CHECK(run({"bernoulli"}).code == cli::UsageError);
        CHECK(run({"bernoulli", "--n", "x"}).code == cli::UsageError);
        CHECK(run({"bernoulli", "--n", "-3"}).code == cli::UsageError);
        CHECK(run({"bernoulli", "--n", "3", "--method", "magic"}).code == cli::UsageError);
        CHECK(run({"--format", "xml", "bernoulli", "--n", "3"}).code == cli::UsageError);
        CHECK(run({"family", "--n", "2", "--params", "1,0,1"}).code == cli::UsageError);
        CHECK(run({"verify", "--identity", "nope"}).code == cli::UsageError);
        auto r = run({"bell", "--w", "1/0"});
        CHECK(r.code != 0);
        CHECK(!r.err.empty());
    }

    TEST_CASE("domain errors exit 2")
    {
        CHECK(run({"family", "--kind", "Q", "--n", "2", "--params", "1,1,1,1"}).code == cli::DomainFailure);
        CHECK(run({"family", "--kind", "H", "--n", "2", "--params", "0,1"}).code == cli::DomainFailure);
        CHECK(run({"matrix", "--m", "2", "--params", "1,0,2,1", "--square"}).code == cli::DomainFailure);
        CHECK(run({"zeta", "--theorem", "af-i0a", "--b", "1"}).code == cli::DomainFailure);
        auto r = run({"family", "--kind", "Q", "--n", "2", "--params", "1,1,1,1"});
        CHECK(r.err.find("singular") != std::string::npos);
        CHECK(r.out.empty());
    }

    TEST_CASE("output file")
    {
        auto path = temp_path("cli_out.txt");
        auto r = run({"--output", path, "bernoulli", "--n", "2"});
        CHECK(r.code == 0);
        CHECK(r.out.empty());
        std::ifstream in(path);
        std::stringstream ss;
        ss << in.rdbuf();
        CHECK(ss.str() == "1, -1/2, 1/6\n");
        std::remove(path.c_str());
        CHECK(run({"--output", "/nonexistent-dir/x.txt", "bernoulli", "--n", "2"}).code == cli::DomainFailure);
    }

    TEST_CASE("verify exit code tracks failures")
    {
        for (const char *id : {"ey1", "af-i2", "af-i01", "dn2", "derivative"}) {
            auto r = run({"verify", "--identity", id, "--max-m", "6", "--samples", "4"});
            CHECK(r.code == 0);
            CHECK(r.out.find(" exact") != std::string::npos);
        }
        CHECK(run({"verify", "--identity", "ey1", "--samples", "0"}).code == cli::DomainFailure);
    }

    TEST_CASE("help documents defaults")
    {
        auto h = run({"zeta", "--help"});
        CHECK(h.code == 0);
        CHECK(h.out.find("[60]") != std::string::npos);
        CHECK(h.out.find("[bx13]") != std::string::npos);
        auto top = run({"--help"});
        CHECK(top.out.find("[12]") != std::string::npos);
    }

    TEST_CASE("determinism")
    {
        std::vector<std::string> args{"--format", "json", "zeta", "--theorem", "bnx4", "--k", "1", "--max-terms", "20",
                                      "--digits", "6"};
        auto first = run(args), second = run(args);
        CHECK(first.code == 0);
        CHECK(first.out == second.out);
    }
}
