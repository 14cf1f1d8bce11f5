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

#ifndef FLOQ_REGIONS_HPP
#define FLOQ_REGIONS_HPP

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "floq/otoc.hpp"

namespace floq {

/// C above this counts as departed from zero. Sits just above accumulated round-off.
inline constexpr double kDepartureThreshold = 1e-10;

/// Inclusive kick interval [lo, hi].
struct KickWindow {
    int lo = 0;
    int hi = 0;

    bool contains(int n) const noexcept { return n >= lo && n <= hi; }
    friend bool operator==(const KickWindow&, const KickWindow&) = default;
};

struct PowerLawFit {
    double exponent = 0.0;   ///< b in C ≈ A n^b
    double prefactor = 0.0;  ///< A
    double std_error = 0.0;  ///< standard error of b
    int points = 0;
};

enum class ProfileModel {
    TriangularLinear,  ///< b = b_max - κ |N/2 - Δl|
    Quadratic,         ///< b = b_max - λ (N/2 - Δl)²
};

struct ProfilePoint {
    int delta_l = 0;
    double exponent = 0.0;
};

struct ExponentProfile {
    std::vector<int> separations;
    std::vector<double> exponents;
    ProfileModel model = ProfileModel::TriangularLinear;
    double slope = 0.0;      ///< κ or λ
    double b_max = 0.0;
    double b_at_edge = 0.0;  ///< model value at Δl = 1
    double residual = 0.0;   ///< RMS of the fit residuals
};

enum class SaturationMode { LinearDecay, EnvelopeLinearDecay, RevivalScan };

std::string_view to_string(SaturationMode mode);
std::optional<SaturationMode> parse_saturation_mode(std::string_view text);
std::string_view to_string(ProfileModel model);

struct SaturationFit {
    double mu = 0.0;  ///< -(d Re F / dn), positive for a decaying F
    bool revival_detected = false;
    int points = 0;   ///< points that entered the slope fit
};

struct RegionReport {
    std::optional<int> t_char;
    std::optional<KickWindow> dynamic_window;
    std::optional<PowerLawFit> power_law;
    std::optional<int> t_s;
    std::optional<KickWindow> saturation_window;
    std::optional<double> mu;
    bool revival_detected = false;
    SaturationMode saturation_mode = SaturationMode::EnvelopeLinearDecay;
};

struct ClassifyOptions {
    double threshold = kDepartureThreshold;
    /// Unset: RevivalScan for integrable TM series, EnvelopeLinearDecay otherwise.
    std::optional<SaturationMode> saturation_mode;
    /// When set, the dynamic window also ends before the first kick whose moving average
    /// exceeds this fraction of the trailing-quarter mean.
    std::optional<double> dynamic_end_fraction;
};

/// Smallest evaluated n with C(n) > threshold, or nullopt when the series never departs.
std::optional<int> detect_characteristic_kick(const OtocSeries& series,
                                              double threshold = kDepartureThreshold);

/// Least-squares line through (log n, log C) over the evaluated kicks inside `window`.
/// Throws FitDomainError on C <= 0 (or n <= 0) and InsufficientDataError below 4 points.
PowerLawFit fit_power_law(const OtocSeries& series, KickWindow window);

/// Fits b_max and κ (or λ) with the vertex pinned at Δl = N/2.
/// Throws InsufficientDataError for fewer than 3 distinct separations.
ExponentProfile fit_exponent_profile(std::span<const ProfilePoint> points, int n_sites,
                                     ProfileModel model);

/// Slope of Re F (or of its strict local maxima) over the window, and the revival flag.
/// Throws InsufficientDataError when the window holds fewer than 10 evaluated points.
SaturationFit fit_saturation(const OtocSeries& series, KickWindow window, SaturationMode mode);

/// Smallest evaluated kick at which C exceeds `level`, or nullopt.
std::optional<int> first_crossing(const OtocSeries& series, double level);

/// Characteristic kick, then t_s as the first kick whose centered 5-point moving average of
/// C exceeds 0.9 of the trailing-quarter mean (only accepted ahead of that trailing quarter),
/// dynamic window [t_char+1, t_s-1] (or to the end when t_s is absent) and saturation fit
/// over [t_s, end]. Fits with too little data leave their fields empty.
RegionReport classify_regions(const OtocSeries& series, const ClassifyOptions& options = {});

}  // namespace floq

#endif  // FLOQ_REGIONS_HPP
