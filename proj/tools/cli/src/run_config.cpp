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

#include "floq_cli/run_config.hpp"

#include <charconv>
#include <fstream>
#include <numbers>
#include <regex>
#include <sstream>
#include <string>

namespace floq::cli {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string_view unquote(std::string_view s) {
    if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front()) {
        return s.substr(1, s.size() - 2);
    }
    return s;
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
    T value{};
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty()) {
        throw UsageError("invalid value '" + std::string(text) + "' for config key '" +
                         std::string(key) + "'");
    }
    return value;
}

std::optional<InitialState::Kind> parse_initial(std::string_view text) {
    if (text == "all_up" || text == "AllUpZ") return InitialState::Kind::AllUpZ;
    if (text == "all_right" || text == "AllRightX") return InitialState::Kind::AllRightX;
    if (text == "haar" || text == "HaarRandom") return InitialState::Kind::HaarRandom;
    return std::nullopt;
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value) {
    throw UsageError("invalid value '" + std::string(value) + "' for config key '" +
                     std::string(key) + "'");
}

}  // namespace

ModelConfig RunConfig::model() const {
    ModelConfig config;
    config.n_sites = n_sites;
    config.j_x = j_x;
    config.h_x = h_x.value_or(variant == Variant::Nonintegrable ? 1.0 : 0.0);
    config.h_z = h_z;
    config.tau = tau;
    config.variant = variant;
    return config;
}

OtocRequest RunConfig::request() const {
    OtocRequest request;
    request.config = model();
    request.axis = axis;
    request.l = l;
    request.m = m;
    request.n_max = n_max;
    request.stride = stride;
    request.dense_until = dense_until.value_or(stride > 1 ? 200 : 0);
    if (initial) request.initial = InitialState{*initial, seed};
    request.kick_budget = kick_budget;
    return request;
}

double parse_tau(std::string_view text) {
    static const std::regex pattern(
        R"(^\s*([0-9]*\.?[0-9]*(?:[eE][+-]?[0-9]+)?)\s*\*?\s*(eps|pi)?\s*(?:/\s*([0-9]*\.?[0-9]+))?\s*$)");
    const std::string input(unquote(trim(text)));
    std::smatch match;
    if (!std::regex_match(input, match, pattern) || input.empty()) {
        throw UsageError("invalid value '" + input + "' for config key 'tau'");
    }
    const std::string coefficient = match[1].str();
    const std::string unit = match[2].str();
    const std::string divisor = match[3].str();
    if (coefficient.empty() && unit.empty()) {
        throw UsageError("invalid value '" + input + "' for config key 'tau'");
    }
    double value = coefficient.empty() ? 1.0 : parse_number<double>("tau", coefficient);
    if (unit == "eps") value *= kEpsilon;
    if (unit == "pi") value *= std::numbers::pi;
    if (!divisor.empty()) {
        const double d = parse_number<double>("tau", divisor);
        if (d == 0.0) throw UsageError("invalid value '" + input + "' for config key 'tau'");
        value /= d;
    }
    return value;
}

void apply_setting(RunConfig& config, std::string_view key, std::string_view raw) {
    const std::string_view value = unquote(trim(raw));
    if (key == "n_sites") {
        config.n_sites = parse_number<int>(key, value);
    } else if (key == "j_x") {
        config.j_x = parse_number<double>(key, value);
    } else if (key == "h_x") {
        config.h_x = parse_number<double>(key, value);
    } else if (key == "h_z") {
        config.h_z = parse_number<double>(key, value);
    } else if (key == "tau") {
        config.tau = parse_tau(value);
        config.tau_text = std::string(value);
    } else if (key == "variant") {
        const auto v = parse_variant(value);
        if (!v) bad_value(key, value);
        config.variant = *v;
    } else if (key == "axis") {
        const auto a = parse_otoc_axis(value);
        if (!a) bad_value(key, value);
        config.axis = *a;
    } else if (key == "l") {
        config.l = parse_number<int>(key, value);
    } else if (key == "m") {
        config.m = parse_number<int>(key, value);
    } else if (key == "n_max") {
        config.n_max = parse_number<int>(key, value);
    } else if (key == "stride") {
        config.stride = parse_number<int>(key, value);
    } else if (key == "dense_until") {
        config.dense_until = parse_number<int>(key, value);
    } else if (key == "initial") {
        const auto kind = parse_initial(value);
        if (!kind) bad_value(key, value);
        config.initial = *kind;
    } else if (key == "seed") {
        config.seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "kick_budget") {
        config.kick_budget = parse_number<std::uint64_t>(key, value);
    } else if (key == "out_dir") {
        config.out_dir = std::string(value);
    } else {
        throw UsageError("unknown config key '" + std::string(key) + "'");
    }
}

RunConfig parse_config_text(std::string_view text, RunConfig base) {
    std::istringstream lines{std::string(text)};
    std::string line;
    int number = 0;
    while (std::getline(lines, line)) {
        ++number;
        std::string_view view(line);
        if (const auto hash = view.find('#'); hash != std::string_view::npos) {
            view = view.substr(0, hash);
        }
        view = trim(view);
        if (view.empty()) continue;
        const auto eq = view.find('=');
        if (eq == std::string_view::npos) {
            throw UsageError("config line " + std::to_string(number) + " is not key=value");
        }
        apply_setting(base, trim(view.substr(0, eq)), view.substr(eq + 1));
    }
    return base;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config_text(text.str());
}

void apply_override(RunConfig& config, std::string_view assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos) {
        throw UsageError("override '" + std::string(assignment) + "' is not key=value");
    }
    apply_setting(config, trim(assignment.substr(0, eq)), assignment.substr(eq + 1));
}

std::string_view initial_kind_name(InitialState::Kind kind) {
    switch (kind) {
        case InitialState::Kind::AllUpZ: return "all_up";
        case InitialState::Kind::AllRightX: return "all_right";
        case InitialState::Kind::HaarRandom: return "haar";
    }
    return "all_up";
}

}  // namespace floq::cli
