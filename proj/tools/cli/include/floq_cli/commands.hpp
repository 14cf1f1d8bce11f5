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

#ifndef FLOQ_CLI_COMMANDS_HPP
#define FLOQ_CLI_COMMANDS_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "floq/regions.hpp"
#include "floq_cli/run_config.hpp"

namespace floq::cli {

/// Process exit statuses.
enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitUsage = 2,
    kExitTruncated = 3,
};

/// Writes `series.csv` and `manifest.json` into `out_dir`.
/// Returns kExitTruncated when the kick budget cut the series short.
int cmd_run(const RunConfig& config, const std::filesystem::path& out_dir, std::ostream& log);

enum class SweepAxis { Tau, DeltaL, N };

std::optional<SweepAxis> parse_sweep_axis(std::string_view text);
std::string_view to_string(SweepAxis axis);

struct SweepOptions {
    SweepAxis axis = SweepAxis::DeltaL;
    std::vector<std::string> values;
    int jobs = 1;
    ClassifyOptions classify;
    ProfileModel model = ProfileModel::TriangularLinear;
};

/// One series per value under `out_dir/<axis>_<value>/series.csv`, plus `profile.csv` and a
/// single `manifest.json` listing every file. Sweeping Δl also fits an ExponentProfile.
int cmd_sweep(const RunConfig& base, const SweepOptions& options,
              const std::filesystem::path& out_dir, std::ostream& log);

/// Region report for an existing series. The request (axis, variant) is taken from a
/// `manifest.json` next to the series when present.
int cmd_analyze(const std::filesystem::path& series_path, const ClassifyOptions& options,
                const std::optional<std::filesystem::path>& out_dir, std::ostream& out);

/// Re-executes the command recorded in a manifest. `out_dir` overrides the recorded one.
int cmd_rerun(const std::filesystem::path& manifest_path,
              const std::optional<std::filesystem::path>& out_dir, std::ostream& log);

}  // namespace floq::cli

#endif  // FLOQ_CLI_COMMANDS_HPP
