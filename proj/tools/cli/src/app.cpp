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

#include "floq_cli/app.hpp"

#include <ostream>

#include "CLI11.hpp"
#include "floq_cli/commands.hpp"
#include "floq_cli/io.hpp"
#include "floq_cli/validate.hpp"

namespace floq::cli {
namespace {

struct Options {
    std::string config_path;
    std::vector<std::string> overrides;
    std::string out_dir;
    std::string manifest;
    int stride = 0;
    int jobs = 1;
    double threshold = kDepartureThreshold;
    std::string mode;
    double window_fraction = 0.0;
    std::string axis = "delta_l";
    std::vector<std::string> values;
    std::string profile_model = "triangular";
    std::string series;
    std::string level = "quick";
    bool json = false;
    std::string fault = "none";
};

RunConfig assemble_config(const Options& o) {
    RunConfig config = o.config_path.empty() ? RunConfig{} : load_config(o.config_path);
    for (const std::string& assignment : o.overrides) apply_override(config, assignment);
    if (o.stride > 0) config.stride = o.stride;
    return config;
}

ClassifyOptions assemble_classify(const Options& o) {
    ClassifyOptions options;
    options.threshold = o.threshold;
    if (!o.mode.empty()) {
        options.saturation_mode = parse_saturation_mode(o.mode);
        if (!options.saturation_mode) throw UsageError("unknown saturation mode '" + o.mode + "'");
    }
    if (o.window_fraction > 0.0) options.dynamic_end_fraction = o.window_fraction;
    return options;
}

std::optional<std::filesystem::path> out_override(const Options& o) {
    if (o.out_dir.empty()) return std::nullopt;
    return std::filesystem::path(o.out_dir);
}

void add_config_options(CLI::App& cmd, Options& o) {
    cmd.add_option("--config", o.config_path, "key=value configuration file");
    cmd.add_option("--set", o.overrides, "override one config key (key=value), repeatable");
    cmd.add_option("--out", o.out_dir, "output directory (default: out_dir from the config)");
    cmd.add_option("--stride", o.stride, "evaluate every k-th kick beyond dense_until")
        ->check(CLI::PositiveNumber);
    cmd.add_option("--manifest", o.manifest, "re-run exactly what a manifest.json records");
}

void add_classify_options(CLI::App& cmd, Options& o) {
    cmd.add_option("--threshold", o.threshold, "departure threshold on C")
        ->check(CLI::PositiveNumber);
    cmd.add_option("--mode", o.mode, "saturation fit: linear, envelope or revival");
    cmd.add_option("--window-fraction", o.window_fraction,
                   "end the dynamic window where C first reaches this fraction of its tail mean");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact OTOC simulator and analysis for kicked transverse-field Ising rings",
                 kToolName};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);
    Options o;

    CLI::App* run = app.add_subcommand("run", "compute one OTOC series");
    add_config_options(*run, o);

    CLI::App* sweep = app.add_subcommand("sweep", "one series per value of tau, delta_l or n");
    add_config_options(*sweep, o);
    add_classify_options(*sweep, o);
    sweep->add_option("--axis", o.axis, "tau, delta_l or n")
        ->check(CLI::IsMember({"tau", "delta_l", "n", "n_sites"}));
    sweep->add_option("--values", o.values, "sweep values (comma separated or repeated)")
        ->delimiter(',');
    sweep->add_option("--jobs", o.jobs, "series computed concurrently")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--profile-model", o.profile_model, "triangular or quadratic")
        ->check(CLI::IsMember({"triangular", "quadratic"}));

    CLI::App* analyze = app.add_subcommand("analyze", "region report for an existing series.csv");
    analyze->add_option("series", o.series, "path to series.csv")->required();
    analyze->add_option("--out", o.out_dir, "also write report.json here");
    add_classify_options(*analyze, o);

    CLI::App* validate = app.add_subcommand("validate", "built-in cross-checks of every module");
    validate->add_option("--level", o.level, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}));
    validate->add_option("--out", o.out_dir, "also write validate.json here");
    validate->add_flag("--json", o.json, "print the machine-readable report instead");
    validate->add_option("--inject-fault", o.fault)->group("");

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.push_back(kToolName);
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const std::string& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (run->parsed()) {
            if (!o.manifest.empty()) return cmd_rerun(o.manifest, out_override(o), out);
            const RunConfig config = assemble_config(o);
            return cmd_run(config, out_override(o).value_or(config.out_dir), out);
        }
        if (sweep->parsed()) {
            if (!o.manifest.empty()) return cmd_rerun(o.manifest, out_override(o), out);
            const RunConfig config = assemble_config(o);
            SweepOptions options;
            options.axis = *parse_sweep_axis(o.axis);
            options.values = o.values;
            options.jobs = o.jobs;
            options.classify = assemble_classify(o);
            options.model = o.profile_model == "quadratic" ? ProfileModel::Quadratic
                                                           : ProfileModel::TriangularLinear;
            return cmd_sweep(config, options, out_override(o).value_or(config.out_dir), out);
        }
        if (analyze->parsed()) {
            return cmd_analyze(o.series, assemble_classify(o), out_override(o), out);
        }
        if (validate->parsed()) {
            const auto fault = parse_fault(o.fault);
            if (!fault) throw UsageError("unknown fault '" + o.fault + "'");
            const auto results = run_validation(*parse_validate_level(o.level), *fault);
            const nlohmann::json report = to_json(results);
            if (auto dir = out_override(o)) {
                write_text(*dir / "validate.json", report.dump(2) + "\n");
            }
            out << (o.json ? report.dump(2) + "\n" : render_report(results));
            return report["passed"].get<bool>() ? kExitOk : kExitCheckFailed;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ConfigError& e) {
        err << "configuration error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}

}  // namespace floq::cli
