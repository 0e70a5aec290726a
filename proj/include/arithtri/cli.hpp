// Copyright 2026 The arithtri Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef ARITHTRI_CLI_HPP
#define ARITHTRI_CLI_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "arithtri/trajectories.hpp"
#include "arithtri/triangles.hpp"
#include "arithtri/words.hpp"

namespace arithtri::cli {

enum class OutputFormat { Text, Csv, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapRefused = 3;

inline constexpr const char* kCapEnvVar = "ARITHTRI_ENUM_CAP";
inline constexpr std::size_t kDefaultNonlinearRowMax = 1000;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Config {
    std::size_t enumeration_cap = kDefaultEnumerationCap;
    std::size_t nonlinear_row_max = kDefaultNonlinearRowMax;
};

/// Default cap, raised (never lowered) by a valid ARITHTRI_ENUM_CAP value.
/// A malformed value is a UsageError.
std::size_t enumeration_cap_from_env(const char* value);

OutputFormat parse_format(std::string_view s);
TriangleKind parse_kind(std::string_view s);     // linear|nonlinear|p|q
IndexKind parse_index_kind(std::string_view s);  // p|q|linear|nonlinear
WalkSystem parse_system(std::string_view s);     // p|q|plain|integrated

/// Shortest decimal that reads back to the same double, '.' separator.
std::string format_real(double v);

void cmd_row(std::ostream& out, TriangleKind kind, long long n, OutputFormat format,
             const Config& config = {});
void cmd_expand(std::ostream& out, long long n, IndexKind type, OutputFormat format,
                const Config& config = {});
void cmd_trajectories(std::ostream& out, long long n, WalkSystem system, OutputFormat format,
                      const Config& config = {});
void cmd_dist(std::ostream& out, TriangleKind kind, long long n, OutputFormat format,
              const Config& config = {});
void cmd_compare(std::ostream& out, long long n, OutputFormat format, const Config& config = {});

/// Full command-line entry point. Returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace arithtri::cli

#endif  // ARITHTRI_CLI_HPP
