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

#ifndef FLOQ_CLI_RUN_CONFIG_HPP
#define FLOQ_CLI_RUN_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "floq/error.hpp"
#include "floq/otoc.hpp"

namespace floq::cli {

/// Bad command line or configuration input. Maps to exit status 2.
class UsageError : public Error {
   public:
    using Error::Error;
};

/// Everything a `run` needs, as read from a key=value file plus overrides.
struct RunConfig {
    int n_sites = 8;
    double j_x = 1.0;
    std::optional<double> h_x;  ///< unset: 0 for integrable, 1 for nonintegrable
    double h_z = 1.0;
    double tau = kEpsilon / 2.0;
    std::string tau_text = "eps/2";
    Variant variant = Variant::Integrable;
    OtocAxis axis = OtocAxis::TM;
    int l = 0;
    int m = 1;
    int n_max = 50;
    int stride = 1;
    std::optional<int> dense_until;  ///< unset: 200 when stride > 1, else 0
    std::optional<InitialState::Kind> initial;  ///< unset: the axis default
    std::uint64_t seed = 0;
    std::uint64_t kick_budget = 0;
    std::string out_dir = "out";

    ModelConfig model() const;
    OtocRequest request() const;
};

/// Parses a period: a plain number, or `[k][*](eps|pi)[/d]` such as `6eps/2` or `pi/56`.
/// `eps` is π/28. Throws UsageError on malformed text.
double parse_tau(std::string_view text);

/// Sets one key. Throws UsageError naming the key when it is unknown or its value malformed.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

/// `key=value` lines; `#` starts a comment; values may be quoted.
RunConfig parse_config_text(std::string_view text, RunConfig base = {});
RunConfig load_config(const std::filesystem::path& path);

/// Applies `key=value` as given on the command line.
void apply_override(RunConfig& config, std::string_view assignment);

std::string_view initial_kind_name(InitialState::Kind kind);

}  // namespace floq::cli

#endif  // FLOQ_CLI_RUN_CONFIG_HPP
