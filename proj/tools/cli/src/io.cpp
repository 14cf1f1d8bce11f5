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

#include "floq_cli/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

namespace floq::cli {
namespace {

double parse_field(std::string_view text, const std::filesystem::path& path, int line) {
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw UsageError(path.string() + ":" + std::to_string(line) + ": malformed number '" +
                         std::string(text) + "'");
    }
    return value;
}

template <typename T>
nlohmann::json optional_json(const std::optional<T>& value) {
    return value ? nlohmann::json(*value) : nlohmann::json(nullptr);
}

nlohmann::json window_json(const std::optional<KickWindow>& window) {
    if (!window) return nullptr;
    return nlohmann::json::array({window->lo, window->hi});
}

}  // namespace

std::string format_real(double value) {
    std::array<char, 40> buffer{};
    const auto [ptr, ec] =
        std::to_chars(buffer.data(), buffer.data() + buffer.size(), value,
                      std::chars_format::general, 17);
    return std::string(buffer.data(), ptr);
}

std::string series_csv(const OtocSeries& series) {
    std::string out = "n,re_f,im_f,c\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        out += std::to_string(series.kicks[i]);
        out += ',';
        out += format_real(series.f_values[i].real());
        out += ',';
        out += format_real(series.f_values[i].imag());
        out += ',';
        out += format_real(series.c_values[i]);
        out += '\n';
    }
    return out;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + path.string());
    out << text;
    if (!out) throw Error("write failed for " + path.string());
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

void write_series_csv(const std::filesystem::path& path, const OtocSeries& series) {
    write_text(path, series_csv(series));
}

OtocSeries read_series_csv(const std::filesystem::path& path) {
    std::istringstream in(read_text(path));
    std::string line;
    if (!std::getline(in, line) || line != "n,re_f,im_f,c") {
        throw UsageError(path.string() + ": missing header n,re_f,im_f,c");
    }
    std::vector<int> kicks;
    std::vector<Amplitude> values;
    int number = 1;
    while (std::getline(in, line)) {
        ++number;
        if (line.empty()) continue;
        std::array<std::string_view, 4> fields;
        std::string_view rest(line);
        for (std::size_t k = 0; k < fields.size(); ++k) {
            const auto comma = rest.find(',');
            if ((comma == std::string_view::npos) != (k + 1 == fields.size())) {
                throw UsageError(path.string() + ":" + std::to_string(number) +
                                 ": expected 4 fields");
            }
            fields[k] = rest.substr(0, comma);
            if (comma != std::string_view::npos) rest.remove_prefix(comma + 1);
        }
        const double n = parse_field(fields[0], path, number);
        kicks.push_back(static_cast<int>(n));
        values.emplace_back(parse_field(fields[1], path, number),
                            parse_field(fields[2], path, number));
    }
    return series_from_values(std::move(kicks), std::move(values));
}

nlohmann::json to_json(const RunConfig& c) {
    const OtocRequest request = c.request();
    nlohmann::json j;
    j["n_sites"] = c.n_sites;
    j["j_x"] = c.j_x;
    j["h_x"] = request.config.h_x;
    j["h_z"] = c.h_z;
    j["tau"] = c.tau;
    j["tau_text"] = c.tau_text;
    j["variant"] = std::string(to_string(c.variant));
    j["axis"] = std::string(to_string(c.axis));
    j["l"] = c.l;
    j["m"] = c.m;
    j["n_max"] = c.n_max;
    j["stride"] = c.stride;
    j["dense_until"] = request.dense_until;
    j["initial"] = std::string(initial_kind_name(request.effective_initial().kind));
    j["seed"] = c.seed;
    j["kick_budget"] = c.kick_budget;
    j["out_dir"] = c.out_dir;
    return j;
}

RunConfig run_config_from_json(const nlohmann::json& j) {
    try {
        RunConfig c;
        c.n_sites = j.at("n_sites").get<int>();
        c.j_x = j.at("j_x").get<double>();
        c.h_x = j.at("h_x").get<double>();
        c.h_z = j.at("h_z").get<double>();
        c.tau = j.at("tau").get<double>();
        c.tau_text = j.value("tau_text", format_real(c.tau));
        apply_setting(c, "variant", j.at("variant").get<std::string>());
        apply_setting(c, "axis", j.at("axis").get<std::string>());
        c.l = j.at("l").get<int>();
        c.m = j.at("m").get<int>();
        c.n_max = j.at("n_max").get<int>();
        c.stride = j.at("stride").get<int>();
        c.dense_until = j.at("dense_until").get<int>();
        apply_setting(c, "initial", j.at("initial").get<std::string>());
        c.seed = j.at("seed").get<std::uint64_t>();
        c.kick_budget = j.at("kick_budget").get<std::uint64_t>();
        c.out_dir = j.value("out_dir", c.out_dir);
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("manifest config is incomplete: ") + e.what());
    }
}

nlohmann::json to_json(const RegionReport& r) {
    nlohmann::json j;
    j["t_char"] = optional_json(r.t_char);
    j["dynamic_window"] = window_json(r.dynamic_window);
    if (r.power_law) {
        j["b"] = r.power_law->exponent;
        j["b_stderr"] = r.power_law->std_error;
        j["prefactor"] = r.power_law->prefactor;
        j["fit_points"] = r.power_law->points;
    } else {
        j["b"] = nullptr;
        j["b_stderr"] = nullptr;
        j["prefactor"] = nullptr;
        j["fit_points"] = nullptr;
    }
    j["t_s"] = optional_json(r.t_s);
    j["saturation_window"] = window_json(r.saturation_window);
    j["mu"] = optional_json(r.mu);
    j["revival_detected"] = r.revival_detected;
    j["saturation_mode"] = std::string(to_string(r.saturation_mode));
    return j;
}

nlohmann::json to_json(const ExponentProfile& p) {
    nlohmann::json j;
    j["separations"] = p.separations;
    j["exponents"] = p.exponents;
    j["model"] = std::string(to_string(p.model));
    j[p.model == ProfileModel::TriangularLinear ? "kappa" : "lambda"] = p.slope;
    j["b_max"] = p.b_max;
    j["b_at_edge"] = p.b_at_edge;
    j["residual"] = p.residual;
    return j;
}

}  // namespace floq::cli
