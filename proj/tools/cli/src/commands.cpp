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

#include "floq_cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <exception>
#include <ostream>
#include <thread>

#include "floq_cli/io.hpp"

namespace floq::cli {
namespace {

using Clock = std::chrono::steady_clock;

// Sweep values such as `7eps/2` become one directory level: `7eps_2`.
std::string path_safe(std::string value) {
    for (char& ch : value) {
        const bool keep = std::isalnum(static_cast<unsigned char>(ch)) || ch == '.' || ch == '-' ||
                          ch == '+';
        if (!keep) ch = '_';
    }
    return value;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

nlohmann::json base_manifest(std::string_view command, const RunConfig& config) {
    nlohmann::json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = std::string(command);
    j["config"] = to_json(config);
    return j;
}

nlohmann::json classify_json(const ClassifyOptions& options) {
    nlohmann::json j;
    j["threshold"] = options.threshold;
    j["saturation_mode"] = options.saturation_mode
                               ? nlohmann::json(std::string(to_string(*options.saturation_mode)))
                               : nlohmann::json(nullptr);
    j["dynamic_end_fraction"] = options.dynamic_end_fraction
                                    ? nlohmann::json(*options.dynamic_end_fraction)
                                    : nlohmann::json(nullptr);
    return j;
}

ClassifyOptions classify_from_json(const nlohmann::json& j) {
    ClassifyOptions options;
    options.threshold = j.value("threshold", kDepartureThreshold);
    if (j.contains("saturation_mode") && !j["saturation_mode"].is_null()) {
        options.saturation_mode = parse_saturation_mode(j["saturation_mode"].get<std::string>());
    }
    if (j.contains("dynamic_end_fraction") && !j["dynamic_end_fraction"].is_null()) {
        options.dynamic_end_fraction = j["dynamic_end_fraction"].get<double>();
    }
    return options;
}

std::string optional_field(const std::optional<double>& value) {
    return value ? format_real(*value) : std::string();
}

std::string optional_field(const std::optional<int>& value) {
    return value ? std::to_string(*value) : std::string();
}

/// Per-value config for a sweep. Δl moves V to site (l + Δl) mod N.
RunConfig sweep_point(const RunConfig& base, SweepAxis axis, const std::string& value) {
    RunConfig config = base;
    switch (axis) {
        case SweepAxis::Tau:
            apply_setting(config, "tau", value);
            break;
        case SweepAxis::DeltaL: {
            RunConfig probe;
            apply_setting(probe, "m", value);
            const int n = config.n_sites;
            config.m = ((config.l + probe.m) % n + n) % n;
            break;
        }
        case SweepAxis::N:
            apply_setting(config, "n_sites", value);
            break;
    }
    return config;
}

struct SweepPoint {
    RunConfig config;
    OtocSeries series;
    RegionReport report;
};

}  // namespace

int cmd_run(const RunConfig& config, const std::filesystem::path& out_dir, std::ostream& log) {
    const OtocRequest request = config.request();
    request.validate();
    const auto start = Clock::now();
    const OtocSeries series = compute_otoc_series(request);
    const double elapsed = seconds_since(start);

    write_series_csv(out_dir / "series.csv", series);
    RunConfig recorded = config;
    recorded.out_dir = out_dir.string();
    nlohmann::json manifest = base_manifest("run", recorded);
    manifest["outputs"] = nlohmann::json::array({"series.csv"});
    manifest["points"] = series.size();
    manifest["ring_distance"] = request.ring_distance();
    manifest["raw_separation"] = request.raw_separation();
    manifest["truncated"] = series.truncated;
    manifest["kicks_applied"] = series.kicks_applied;
    manifest["duration_seconds"] = elapsed;
    write_text(out_dir / "manifest.json", manifest.dump(2) + "\n");

    log << "wrote " << series.size() << " points to " << (out_dir / "series.csv").string()
        << (series.truncated ? " (truncated by kick budget)" : "") << "\n";
    return series.truncated ? kExitTruncated : kExitOk;
}

std::optional<SweepAxis> parse_sweep_axis(std::string_view text) {
    if (text == "tau") return SweepAxis::Tau;
    if (text == "delta_l") return SweepAxis::DeltaL;
    if (text == "n" || text == "n_sites") return SweepAxis::N;
    return std::nullopt;
}

std::string_view to_string(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::Tau: return "tau";
        case SweepAxis::DeltaL: return "delta_l";
        case SweepAxis::N: return "n_sites";
    }
    return "tau";
}

int cmd_sweep(const RunConfig& base, const SweepOptions& options,
              const std::filesystem::path& out_dir, std::ostream& log) {
    if (options.values.empty()) throw UsageError("sweep needs at least one value");
    if (options.jobs < 1) throw UsageError("--jobs must be at least 1");

    std::vector<SweepPoint> points;
    points.reserve(options.values.size());
    for (const std::string& value : options.values) {
        SweepPoint point{sweep_point(base, options.axis, value), {}, {}};
        point.config.request().validate();
        points.push_back(std::move(point));
    }

    const auto start = Clock::now();
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> failures(points.size());
    const auto worker = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++) {
            try {
                points[i].series = compute_otoc_series(points[i].config.request());
                points[i].report = classify_regions(points[i].series, options.classify);
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };
    {
        const std::size_t workers =
            std::min<std::size_t>(static_cast<std::size_t>(options.jobs), points.size());
        std::vector<std::jthread> pool;
        for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
        worker();
    }
    for (const auto& failure : failures) {
        if (failure) std::rethrow_exception(failure);
    }
    const double elapsed = seconds_since(start);

    const std::string axis_name(to_string(options.axis));
    nlohmann::json outputs = nlohmann::json::array();
    nlohmann::json reports = nlohmann::json::array();
    std::string profile = options.axis == SweepAxis::DeltaL
                              ? "delta_l,b,b_stderr\n"
                              : axis_name + ",t_char,b,b_stderr,t_s,mu\n";
    std::vector<ProfilePoint> profile_points;
    bool truncated = false;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const SweepPoint& p = points[i];
        const std::string dir = axis_name + "_" + path_safe(options.values[i]);
        write_series_csv(out_dir / dir / "series.csv", p.series);
        outputs.push_back(dir + "/series.csv");
        truncated = truncated || p.series.truncated;

        std::optional<double> b;
        std::optional<double> b_err;
        if (p.report.power_law) {
            b = p.report.power_law->exponent;
            b_err = p.report.power_law->std_error;
        }
        switch (options.axis) {
            case SweepAxis::DeltaL: {
                const int dl = p.config.request().raw_separation();
                profile += std::to_string(dl) + "," + optional_field(b) + "," +
                           optional_field(b_err) + "\n";
                if (b) profile_points.push_back({p.config.request().ring_distance(), *b});
                break;
            }
            case SweepAxis::Tau:
            case SweepAxis::N:
                profile += (options.axis == SweepAxis::Tau ? format_real(p.config.tau)
                                                           : std::to_string(p.config.n_sites)) +
                           "," + optional_field(p.report.t_char) + "," + optional_field(b) + "," +
                           optional_field(b_err) + "," + optional_field(p.report.t_s) + "," +
                           optional_field(p.report.mu) + "\n";
                break;
        }
        nlohmann::json entry = to_json(p.report);
        entry["value"] = options.values[i];
        entry["series"] = dir + "/series.csv";
        entry["truncated"] = p.series.truncated;
        entry["kicks_applied"] = p.series.kicks_applied;
        reports.push_back(std::move(entry));
    }
    write_text(out_dir / "profile.csv", profile);
    outputs.push_back("profile.csv");

    RunConfig recorded = base;
    recorded.out_dir = out_dir.string();
    nlohmann::json manifest = base_manifest("sweep", recorded);
    manifest["sweep_axis"] = axis_name;
    manifest["values"] = options.values;
    manifest["classify"] = classify_json(options.classify);
    manifest["profile_model"] = std::string(to_string(options.model));
    manifest["outputs"] = outputs;
    manifest["reports"] = reports;
    manifest["truncated"] = truncated;
    manifest["duration_seconds"] = elapsed;
    manifest["exponent_profile"] = nullptr;
    if (options.axis == SweepAxis::DeltaL) {
        try {
            manifest["exponent_profile"] =
                to_json(fit_exponent_profile(profile_points, base.n_sites, options.model));
        } catch (const InsufficientDataError& e) {
            log << "exponent profile skipped: " << e.what() << "\n";
        }
    }
    write_text(out_dir / "manifest.json", manifest.dump(2) + "\n");

    log << "wrote " << points.size() << " series and profile.csv to " << out_dir.string() << "\n";
    return truncated ? kExitTruncated : kExitOk;
}

int cmd_analyze(const std::filesystem::path& series_path, const ClassifyOptions& options,
                const std::optional<std::filesystem::path>& out_dir, std::ostream& out) {
    OtocSeries series = read_series_csv(series_path);
    const auto manifest_path = series_path.parent_path() / "manifest.json";
    if (std::filesystem::exists(manifest_path)) {
        const auto manifest = nlohmann::json::parse(read_text(manifest_path), nullptr, false);
        if (!manifest.is_discarded() && manifest.value("command", "") == "run") {
            series.request = run_config_from_json(manifest.at("config")).request();
        }
    }
    const RegionReport report = classify_regions(series, options);
    nlohmann::json j = to_json(report);
    j["series"] = series_path.string();
    j["points"] = series.size();
    const std::string text = j.dump(2) + "\n";
    if (out_dir) write_text(*out_dir / "report.json", text);
    out << text;
    return kExitOk;
}

int cmd_rerun(const std::filesystem::path& manifest_path,
              const std::optional<std::filesystem::path>& out_dir, std::ostream& log) {
    const auto manifest = nlohmann::json::parse(read_text(manifest_path), nullptr, false);
    if (manifest.is_discarded() || !manifest.contains("config")) {
        throw UsageError(manifest_path.string() + " is not a floq_otoc manifest");
    }
    const RunConfig config = run_config_from_json(manifest["config"]);
    const std::filesystem::path target = out_dir.value_or(config.out_dir);
    const std::string command = manifest.value("command", "");
    if (command == "run") return cmd_run(config, target, log);
    if (command == "sweep") {
        SweepOptions options;
        const auto axis = parse_sweep_axis(manifest.value("sweep_axis", ""));
        if (!axis) throw UsageError("manifest has no valid sweep_axis");
        options.axis = *axis;
        options.values = manifest.at("values").get<std::vector<std::string>>();
        options.classify = classify_from_json(manifest.value("classify", nlohmann::json::object()));
        options.model = manifest.value("profile_model", "triangular") == "quadratic"
                            ? ProfileModel::Quadratic
                            : ProfileModel::TriangularLinear;
        return cmd_sweep(config, options, target, log);
    }
    throw UsageError("manifest command '" + command + "' cannot be rerun");
}

}  // namespace floq::cli
