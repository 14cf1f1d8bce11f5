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

#ifndef FLOQ_OTOC_HPP
#define FLOQ_OTOC_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "floq/model_config.hpp"
#include "floq/state_vector.hpp"

namespace floq {

/// TM: both observables are σ_z (transverse to the Ising axis). LM: both are σ_x.
enum class OtocAxis { TM, LM };

std::string_view to_string(OtocAxis axis);
std::optional<OtocAxis> parse_otoc_axis(std::string_view text);

/// Pauli axis used for W and V under the given OTOC axis.
Axis observable_axis(OtocAxis axis) noexcept;

/// Initial state paired with each axis when none is given: |↑↑…↑⟩ for TM, |→→…→⟩ for LM.
InitialState default_initial_state(OtocAxis axis) noexcept;

struct OtocRequest {
    ModelConfig config;
    OtocAxis axis = OtocAxis::TM;
    int l = 0;  ///< site of W
    int m = 1;  ///< site of V
    int n_max = 1;
    /// Kicks 0..dense_until are always evaluated; beyond that only multiples of `stride`.
    int stride = 1;
    int dense_until = 0;
    std::optional<InitialState> initial;
    /// Upper bound on the number of Floquet kicks spent; 0 means unlimited.
    std::uint64_t kick_budget = 0;

    void validate() const;
    InitialState effective_initial() const noexcept;
    /// |l - m|, used for labels.
    int raw_separation() const noexcept;
    /// min(|l-m|, N-|l-m|), used for symmetry checks.
    int ring_distance() const noexcept;
};

struct OtocSeries {
    OtocRequest request;
    std::vector<int> kicks;
    std::vector<Amplitude> f_values;
    std::vector<double> c_values;  ///< 1 - Re f
    bool truncated = false;
    std::uint64_t kicks_applied = 0;

    std::size_t size() const noexcept { return kicks.size(); }
};

/// Builds a series from raw values (c is derived). Used by readers and synthetic tests.
OtocSeries series_from_values(std::vector<int> kicks, std::vector<Amplitude> f_values,
                              OtocRequest request = {});

/// The kick indices a request evaluates, in increasing order.
std::vector<int> evaluation_kicks(const OtocRequest& request);

/// F(n) = ⟨W(n) V W(n) V⟩ for every evaluation kick, via the four-segment echo
/// F = ⟨A_n|B_n⟩, A_n = W U^n |ψ⟩, B_n = U^n V U^{-n} W U^n V |ψ⟩.
///
/// U^n|ψ⟩ and U^n V|ψ⟩ are carried forward incrementally; the echo leg is redone for every
/// evaluated n, so the cost is Θ(n_max²/stride) kicks. When the kick budget would be
/// exceeded the series stops early and `truncated` is set.
OtocSeries compute_otoc_series(const OtocRequest& request);

/// F(n) for a single n, computed from scratch without incremental chains.
Amplitude otoc_at_kick(const OtocRequest& request, int n);

}  // namespace floq

#endif  // FLOQ_OTOC_HPP
