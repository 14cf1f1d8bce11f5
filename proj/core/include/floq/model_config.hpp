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

#ifndef FLOQ_MODEL_CONFIG_HPP
#define FLOQ_MODEL_CONFIG_HPP

#include <numbers>
#include <optional>
#include <string_view>

namespace floq {

/// Period unit used throughout the kicked-Ising literature: τ is quoted in units of ε/2.
inline constexpr double kEpsilon = std::numbers::pi / 28.0;

/// Default hard cap on the chain length (2^24 amplitudes = 256 MiB per state).
inline constexpr int kDefaultSiteCap = 24;

/// Largest N accepted anywhere. Reads FLOQ_OTOC_MAX_SITES when set, else kDefaultSiteCap.
int site_cap();

enum class Variant {
    Integrable,     ///< exp(-iτ J_x H_xx) exp(-iτ h_z H_z)
    Nonintegrable,  ///< exp(-iτ (J_x H_xx + h_x H_x)) exp(-iτ h_z H_z)
};

std::string_view to_string(Variant v);
std::optional<Variant> parse_variant(std::string_view text);

/// Physical parameters of a periodic kicked transverse-field Ising ring.
///
/// Energies are dimensionless (ħ = 1). For the integrable variant h_x must be zero.
struct ModelConfig {
    int n_sites = 2;
    double j_x = 1.0;
    double h_x = 0.0;
    double h_z = 1.0;
    double tau = 0.0;
    Variant variant = Variant::Integrable;

    /// Throws ConfigError when any invariant is violated.
    void validate() const;

    /// Longitudinal field actually applied by the Floquet map (zero for the integrable variant).
    double effective_h_x() const noexcept { return variant == Variant::Integrable ? 0.0 : h_x; }

    static ModelConfig integrable(int n_sites, double tau, double j_x = 1.0, double h_z = 1.0);
    static ModelConfig nonintegrable(int n_sites, double tau, double j_x = 1.0, double h_x = 1.0,
                                     double h_z = 1.0);

    friend bool operator==(const ModelConfig&, const ModelConfig&) = default;
};

/// Throws ConfigError unless 2 <= n_sites <= site_cap().
void check_site_count(int n_sites);

}  // namespace floq

#endif  // FLOQ_MODEL_CONFIG_HPP
