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

#include "floq/regions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "floq/error.hpp"

namespace floq {

namespace {

constexpr double kRevivalTolerance = 1e-3;
constexpr int kMinPowerLawPoints = 4;
constexpr int kMinSaturationPoints = 10;

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
};

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
    const double count = static_cast<double>(x.size());
    const double mean_x = std::accumulate(x.begin(), x.end(), 0.0) / count;
    const double mean_y = std::accumulate(y.begin(), y.end(), 0.0) / count;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mean_x) * (x[i] - mean_x);
        sxy += (x[i] - mean_x) * (y[i] - mean_y);
    }
    if (sxx <= 0.0) throw InsufficientDataError("fit abscissae are all equal");
    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_x;
    if (x.size() > 2) {
        double rss = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double r = y[i] - (fit.intercept + fit.slope * x[i]);
            rss += r * r;
        }
        fit.slope_stderr = std::sqrt(rss / (count - 2.0) / sxx);
    }
    return fit;
}

std::vector<std::size_t> indices_in(const OtocSeries& series, KickWindow window) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < series.kicks.size(); ++i) {
        if (window.contains(series.kicks[i])) out.push_back(i);
    }
    return out;
}

}  // namespace

std::string_view to_string(SaturationMode mode) {
    switch (mode) {
        case SaturationMode::LinearDecay:
            return "linear";
        case SaturationMode::EnvelopeLinearDecay:
            return "envelope";
        case SaturationMode::RevivalScan:
            return "revival";
    }
    return "unknown";
}

std::optional<SaturationMode> parse_saturation_mode(std::string_view text) {
    if (text == "linear") return SaturationMode::LinearDecay;
    if (text == "envelope") return SaturationMode::EnvelopeLinearDecay;
    if (text == "revival") return SaturationMode::RevivalScan;
    return std::nullopt;
}

std::string_view to_string(ProfileModel model) {
    return model == ProfileModel::TriangularLinear ? "triangular" : "quadratic";
}

std::optional<int> detect_characteristic_kick(const OtocSeries& series, double threshold) {
    return first_crossing(series, threshold);
}

std::optional<int> first_crossing(const OtocSeries& series, double level) {
    for (std::size_t i = 0; i < series.kicks.size(); ++i) {
        if (series.c_values[i] > level) return series.kicks[i];
    }
    return std::nullopt;
}

PowerLawFit fit_power_law(const OtocSeries& series, KickWindow window) {
    const auto idx = indices_in(series, window);
    if (static_cast<int>(idx.size()) < kMinPowerLawPoints) {
        throw InsufficientDataError("power-law fit needs at least 4 points in [" +
                                    std::to_string(window.lo) + ", " + std::to_string(window.hi) +
                                    "], got " + std::to_string(idx.size()));
    }
    std::vector<double> x, y;
    x.reserve(idx.size());
    y.reserve(idx.size());
    for (const std::size_t i : idx) {
        const int n = series.kicks[i];
        const double c = series.c_values[i];
        if (n <= 0 || !(c > 0.0)) {
            throw FitDomainError("log-log fit needs n > 0 and C > 0; got C(" + std::to_string(n) +
                                 ") = " + std::to_string(c));
        }
        x.push_back(std::log(static_cast<double>(n)));
        y.push_back(std::log(c));
    }
    const LineFit line = fit_line(x, y);
    return {line.slope, std::exp(line.intercept), line.slope_stderr, static_cast<int>(idx.size())};
}

ExponentProfile fit_exponent_profile(std::span<const ProfilePoint> points, int n_sites,
                                     ProfileModel model) {
    std::vector<int> distinct;
    for (const auto& p : points) distinct.push_back(p.delta_l);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() < 3) {
        throw InsufficientDataError("exponent profile needs at least 3 distinct separations, got " +
                                    std::to_string(distinct.size()));
    }
    const double centre = 0.5 * n_sites;
    auto distance = [&](double delta_l) {
        const double d = std::abs(centre - delta_l);
        return model == ProfileModel::TriangularLinear ? d : d * d;
    };

    ExponentProfile profile;
    profile.model = model;
    std::vector<double> x, y;
    for (const auto& p : points) {
        profile.separations.push_back(p.delta_l);
        profile.exponents.push_back(p.exponent);
        x.push_back(distance(p.delta_l));
        y.push_back(p.exponent);
    }
    const LineFit line = fit_line(x, y);
    profile.b_max = line.intercept;
    profile.slope = -line.slope;
    profile.b_at_edge = profile.b_max - profile.slope * distance(1.0);
    double rss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (profile.b_max - profile.slope * x[i]);
        rss += r * r;
    }
    profile.residual = std::sqrt(rss / static_cast<double>(x.size()));
    return profile;
}

SaturationFit fit_saturation(const OtocSeries& series, KickWindow window, SaturationMode mode) {
    const auto idx = indices_in(series, window);
    if (static_cast<int>(idx.size()) < kMinSaturationPoints) {
        throw InsufficientDataError("saturation fit needs at least 10 points in [" +
                                    std::to_string(window.lo) + ", " + std::to_string(window.hi) +
                                    "], got " + std::to_string(idx.size()));
    }
    std::vector<double> n, re;
    for (const std::size_t i : idx) {
        n.push_back(series.kicks[i]);
        re.push_back(series.f_values[i].real());
    }

    SaturationFit out;
    if (mode == SaturationMode::RevivalScan) {
        out.revival_detected = std::any_of(re.begin(), re.end(), [](double r) {
            return std::abs(1.0 - r) <= kRevivalTolerance;
        });
    }
    if (mode == SaturationMode::EnvelopeLinearDecay) {
        std::vector<double> peak_n, peak_re;
        for (std::size_t i = 1; i + 1 < re.size(); ++i) {
            // Strict against the left neighbour, so a flat top is credited to its first kick.
            if (re[i] > re[i - 1] && re[i] >= re[i + 1]) {
                peak_n.push_back(n[i]);
                peak_re.push_back(re[i]);
            }
        }
        if (peak_n.size() < 2) {
            throw InsufficientDataError("envelope fit found fewer than 2 local maxima");
        }
        out.mu = -fit_line(peak_n, peak_re).slope;
        out.points = static_cast<int>(peak_n.size());
        return out;
    }
    out.mu = -fit_line(n, re).slope;
    out.points = static_cast<int>(n.size());
    return out;
}

RegionReport classify_regions(const OtocSeries& series, const ClassifyOptions& options) {
    RegionReport report;
    const bool integrable_tm = series.request.axis == OtocAxis::TM &&
                               series.request.config.variant == Variant::Integrable;
    report.saturation_mode = options.saturation_mode.value_or(
        integrable_tm ? SaturationMode::RevivalScan : SaturationMode::EnvelopeLinearDecay);

    report.t_char = detect_characteristic_kick(series, options.threshold);
    if (!report.t_char || series.kicks.empty()) return report;

    const std::vector<double>& c = series.c_values;
    const std::size_t size = c.size();
    const std::size_t tail_begin = size - size / 4;
    const std::size_t char_index = static_cast<std::size_t>(
        std::find(series.kicks.begin(), series.kicks.end(), *report.t_char) - series.kicks.begin());

    const auto crossing = [&](double fraction, std::size_t end) -> std::optional<int> {
        const double tail_mean =
            std::accumulate(c.begin() + static_cast<std::ptrdiff_t>(tail_begin), c.end(), 0.0) /
            static_cast<double>(size - tail_begin);
        for (std::size_t i = std::max<std::size_t>(char_index, 2); i + 2 < size && i < end; ++i) {
            const double moving = (c[i - 2] + c[i - 1] + c[i] + c[i + 1] + c[i + 2]) / 5.0;
            if (moving > fraction * tail_mean) return series.kicks[i];
        }
        return std::nullopt;
    };
    const bool has_tail = size / 4 > 0 && size >= 5;
    if (has_tail) report.t_s = crossing(0.9, tail_begin);

    const int last = series.kicks.back();
    KickWindow dynamic{*report.t_char + 1, report.t_s ? *report.t_s - 1 : last};
    if (options.dynamic_end_fraction && has_tail) {
        if (const auto end = crossing(*options.dynamic_end_fraction, size))
            dynamic.hi = std::min(dynamic.hi, *end - 1);
    }
    if (dynamic.hi >= dynamic.lo) {
        report.dynamic_window = dynamic;
        try {
            report.power_law = fit_power_law(series, dynamic);
        } catch (const InsufficientDataError&) {
        } catch (const FitDomainError&) {
        }
    }

    if (report.t_s) {
        const KickWindow saturation{*report.t_s, last};
        report.saturation_window = saturation;
        try {
            const SaturationFit fit = fit_saturation(series, saturation, report.saturation_mode);
            report.mu = fit.mu;
            report.revival_detected = fit.revival_detected;
        } catch (const InsufficientDataError&) {
        }
    }
    return report;
}

}  // namespace floq
