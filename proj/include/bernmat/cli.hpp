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

#ifndef BERNMAT_CLI_HPP
#define BERNMAT_CLI_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bernmat::cli {

enum class Subcommand { Bernoulli, Stirling, Bell, Array, Matrix, Inverse, Family, YPoly, Derivative, Verify, Zeta };
enum class OutputFormat { Text, Csv, Json };

/// Exit codes of the command-line tool.
enum ExitCode : int { Ok = 0, UsageError = 1, DomainFailure = 2, VerificationFailure = 3 };

struct CliRequest {
    Subcommand subcommand = Subcommand::Bernoulli;
    /// Option values as given on the command line, keyed without the leading
    /// dashes; defaults are filled in for options the user left out.
    std::map<std::string, std::string> parameters;
    OutputFormat output_format = OutputFormat::Text;
    std::optional<std::string> output_path;
    unsigned digits = 12;
};

struct CliResult {
    int exit_code = Ok;
    std::string output;
    std::string error;
};

/// Parses argv (without the program name). Returns nullopt and fills
/// `result` when parsing ends the run early (usage error or --help).
std::optional<CliRequest> parse_request(const std::vector<std::string> &args, CliResult &result);

/// Executes a parsed request; never throws.
CliResult execute(const CliRequest &request);

/// parse_request + execute + delivery: output goes to request.output_path if
/// set (exit 2 when it cannot be written), otherwise to `out`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace bernmat::cli

#endif
