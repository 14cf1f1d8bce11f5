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

#ifndef FLOQ_CLI_IO_HPP
#define FLOQ_CLI_IO_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "floq/otoc.hpp"
#include "floq/regions.hpp"
#include "floq_cli/run_config.hpp"

namespace floq::cli {

inline constexpr const char* kToolName = "floq_otoc";
inline constexpr const char* kToolVersion = "0.1.0";

/// 17 significant digits in `%.17g` style; parsing it back yields the same double.
std::string format_real(double value);

/// `n,re_f,im_f,c` rows. Re-parsing the text reproduces every value exactly.
std::string series_csv(const OtocSeries& series);
void write_series_csv(const std::filesystem::path& path, const OtocSeries& series);

/// Reads a file written by write_series_csv. The request is left at its default.
OtocSeries read_series_csv(const std::filesystem::path& path);

void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

nlohmann::json to_json(const RunConfig& config);
RunConfig run_config_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RegionReport& report);
nlohmann::json to_json(const ExponentProfile& profile);

}  // namespace floq::cli

#endif  // FLOQ_CLI_IO_HPP
