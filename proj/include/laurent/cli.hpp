/*
   Copyright 2026 The laurent-decide Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LAURENT_CLI_HPP
#define LAURENT_CLI_HPP

#include <optional>
#include <string>
#include <vector>

#include "laurent/ff.hpp"
#include "laurent/frontend.hpp"

namespace laurent::cli {

enum class Format { Json, Text };

struct RunConfig {
    std::string field = "p=2";
    std::optional<std::string> sentence;
    std::optional<std::string> system_file;
    int max_precision = 64;
    int perturb_directions = 8;
    int perturb_depths = 16;
    int candidate_cap = 256;
    Format format = Format::Json;
    int threads = 1;
    bool verify = false;
    bool trace = false;
};

namespace exit_code {
inline constexpr int decided = 0;
inline constexpr int verify_failed = 1;
inline constexpr int user_error = 2;
inline constexpr int unknown = 3;
}  // namespace exit_code

struct Report {
    int exit_code = exit_code::decided;
    /// The verdict document (stdout).
    std::string output;
    /// Diagnostics (stderr).
    std::string errors;
};

/// "8x16" as directions x depths.
std::pair<int, int> parse_perturb_budget(const std::string& text);

/// System file: a header "vars X1 X2 ..", then lines "eq <poly>" and
/// "neq <poly>"; several inequations are merged into their product. Blank
/// lines and lines starting with '#' are skipped.
frontend::Sentence parse_system(const std::string& text, const ff::Field& field);

/// Runs one decision with the given configuration.
Report execute(const RunConfig& config);

/// Command-line entry: argv without the program name, e.g.
/// {"decide", "--field", "p=3", "exists X. X*X = 1+t"}.
Report run(const std::vector<std::string>& args);

}  // namespace laurent::cli

#endif
