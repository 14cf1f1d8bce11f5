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

#include "floq/otoc.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>

#include "floq/error.hpp"
#include "floq/floquet.hpp"

namespace floq {

std::string_view to_string(OtocAxis axis) { return axis == OtocAxis::TM ? "tm" : "lm"; }

std::optional<OtocAxis> parse_otoc_axis(std::string_view text) {
    if (text == "tm" || text == "TM") return OtocAxis::TM;
    if (text == "lm" || text == "LM") return OtocAxis::LM;
    return std::nullopt;
}

Axis observable_axis(OtocAxis axis) noexcept { return axis == OtocAxis::TM ? Axis::Z : Axis::X; }

InitialState default_initial_state(OtocAxis axis) noexcept {
    return axis == OtocAxis::TM ? InitialState::all_up() : InitialState::all_right();
}

void OtocRequest::validate() const {
    config.validate();
    const int n = config.n_sites;
    if (l < 0 || l >= n || m < 0 || m >= n) {
        throw ConfigError("observable sites l=" + std::to_string(l) + ", m=" + std::to_string(m) +
                          " must lie in [0, " + std::to_string(n) + ")");
    }
    if (l == m) {
        throw ConfigError("observable sites must differ (l = m = " + std::to_string(l) + ")");
    }
    if (n_max < 0) throw ConfigError("n_max must be non-negative");
    if (stride < 1) throw ConfigError("stride must be at least 1");
    if (dense_until < 0) throw ConfigError("dense_until must be non-negative");
}

InitialState OtocRequest::effective_initial() const noexcept {
    return initial.value_or(default_initial_state(axis));
}

int OtocRequest::raw_separation() const noexcept { return std::abs(l - m); }

int OtocRequest::ring_distance() const noexcept {
    const int d = raw_separation();
    return std::min(d, config.n_sites - d);
}

OtocSeries series_from_values(std::vector<int> kicks, std::vector<Amplitude> f_values,
                              OtocRequest request) {
    if (kicks.size() != f_values.size()) {
        throw DimensionError("series_from_values: kicks and f_values differ in length");
    }
    OtocSeries series;
    series.request = std::move(request);
    series.kicks = std::move(kicks);
    series.f_values = std::move(f_values);
    series.c_values.reserve(series.f_values.size());
    for (const Amplitude& f : series.f_values) series.c_values.push_back(1.0 - f.real());
    return series;
}

std::vector<int> evaluation_kicks(const OtocRequest& request) {
    std::vector<int> kicks;
    for (int n = 0; n <= request.n_max; ++n) {
        if (n <= request.dense_until || n % request.stride == 0) kicks.push_back(n);
    }
    return kicks;
}

namespace {

// B_n = U^n V U^{-n} W (U^n V|ψ⟩), consuming the forward leg.
Amplitude echo_overlap(const StateVector& forward_psi, StateVector forward_v_psi,
                       const FloquetMap& forward, const FloquetMap& backward, SiteObservable w,
                       SiteObservable v, int n) {
    const StateVector a = apply_pauli(forward_psi, w);
    StateVector b = apply_pauli(std::move(forward_v_psi), w);
    backward.apply_in_place(b, n);
    b = apply_pauli(std::move(b), v);
    forward.apply_in_place(b, n);
    return inner_product(a, b);
}

}  // namespace

OtocSeries compute_otoc_series(const OtocRequest& request) {
    request.validate();
    const FloquetMap forward(request.config);
    const FloquetMap backward = forward.inverse();
    const Axis axis = observable_axis(request.axis);
    const SiteObservable w{request.l, axis};
    const SiteObservable v{request.m, axis};

    OtocSeries series;
    series.request = request;

    StateVector psi = build_initial_state(request.effective_initial(), request.config.n_sites);
    StateVector v_psi = apply_pauli(psi, v);
    int reached = 0;

    for (const int n : evaluation_kicks(request)) {
        const std::uint64_t cost = 2 * static_cast<std::uint64_t>(n - reached) +
                                   2 * static_cast<std::uint64_t>(n);
        if (request.kick_budget != 0 && series.kicks_applied + cost > request.kick_budget) {
            series.truncated = true;
            break;
        }
        forward.apply_in_place(psi, n - reached);
        forward.apply_in_place(v_psi, n - reached);
        reached = n;
        series.kicks_applied += cost;

        // W and V commute at n = 0, so W V W V is the identity.
        const Amplitude f = n == 0 ? Amplitude{1.0, 0.0}
                                   : echo_overlap(psi, v_psi, forward, backward, w, v, n);
        series.kicks.push_back(n);
        series.f_values.push_back(f);
        series.c_values.push_back(1.0 - f.real());
    }
    return series;
}

Amplitude otoc_at_kick(const OtocRequest& request, int n) {
    request.validate();
    if (n < 0) throw ConfigError("kick index must be non-negative");
    if (n == 0) return {1.0, 0.0};
    const FloquetMap forward(request.config);
    const FloquetMap backward = forward.inverse();
    const Axis axis = observable_axis(request.axis);
    const SiteObservable w{request.l, axis};
    const SiteObservable v{request.m, axis};

    const StateVector psi =
        build_initial_state(request.effective_initial(), request.config.n_sites);
    const StateVector psi_n = evolve_n_kicks(psi, forward, n);
    StateVector v_psi_n = evolve_n_kicks(apply_pauli(psi, v), forward, n);
    return echo_overlap(psi_n, std::move(v_psi_n), forward, backward, w, v, n);
}

}  // namespace floq
