// Copyright 2026 The floq_otoc Authors
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

#ifndef FLOQ_CLI_VALIDATE_HPP
#define FLOQ_CLI_VALIDATE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "floq_cli/io.hpp"

namespace floq::cli {

/// Quick keeps every check at N <= 8; Full goes up to N = 12 and adds the τ-order regression.
enum class ValidateLevel { Quick, Full };

std::optional<ValidateLevel> parse_validate_level(std::string_view text);

/// Corruptions injected on purpose to prove a check can fail.
enum class Fault { None, Gamma };

std::optional<Fault> parse_fault(std::string_view text);

struct CheckResult {
    std::string name;
    std::string module;  ///< library module whose behaviour the check exercises
    bool passed = false;
    double measured = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    std::string detail;
    double seconds = 0.0;
};

std::vector<CheckResult> run_validation(ValidateLevel level, Fault fault = Fault::None);

std::string render_report(const std::vector<CheckResult>& results);
nlohmann::json to_json(const std::vector<CheckResult>& results);

}  // namespace floq::cli

#endif  // FLOQ_CLI_VALIDATE_HPP
