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

#include "floq/model_config.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "floq/error.hpp"

namespace floq {

int site_cap() {
    const char* env = std::getenv("FLOQ_OTOC_MAX_SITES");
    if (env == nullptr || *env == '\0') {
        return kDefaultSiteCap;
    }
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || value < 2 || value > 40) {
        throw ConfigError("FLOQ_OTOC_MAX_SITES must be an integer in [2, 40], got '" +
                          std::string(env) + "'");
    }
    return static_cast<int>(value);
}

void check_site_count(int n_sites) {
    const int cap = site_cap();
    if (n_sites < 2 || n_sites > cap) {
        throw ConfigError("n_sites must be in [2, " + std::to_string(cap) + "], got " +
                          std::to_string(n_sites));
    }
}

std::string_view to_string(Variant v) {
    return v == Variant::Integrable ? "integrable" : "nonintegrable";
}

std::optional<Variant> parse_variant(std::string_view text) {
    if (text == "integrable" || text == "Integrable") return Variant::Integrable;
    if (text == "nonintegrable" || text == "Nonintegrable") return Variant::Nonintegrable;
    return std::nullopt;
}

void ModelConfig::validate() const {
    check_site_count(n_sites);
    if (!std::isfinite(j_x) || !std::isfinite(h_x) || !std::isfinite(h_z)) {
        throw ConfigError("couplings must be finite");
    }
    if (!std::isfinite(tau) || tau < 0.0) {
        throw ConfigError("tau must be finite and non-negative, got " + std::to_string(tau));
    }
    if (variant == Variant::Integrable && h_x != 0.0) {
        throw ConfigError("the integrable variant has no longitudinal field; h_x must be 0");
    }
}

ModelConfig ModelConfig::integrable(int n_sites, double tau, double j_x, double h_z) {
    return {n_sites, j_x, 0.0, h_z, tau, Variant::Integrable};
}

ModelConfig ModelConfig::nonintegrable(int n_sites, double tau, double j_x, double h_x,
                                       double h_z) {
    return {n_sites, j_x, h_x, h_z, tau, Variant::Nonintegrable};
}

}  // namespace floq
