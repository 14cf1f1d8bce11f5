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

#include "floq/floquet.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "floq/error.hpp"
#include "kernels.hpp"

namespace floq {

namespace detail {

class KickTables {
   public:
    explicit KickTables(const ModelConfig& c)
        : z_(DiagonalPhases::Kind::ZKick, c.n_sites, 0.0, c.h_z, c.tau),
          // The x kick is H·D·H with unnormalized transforms; 2^-N goes into D.
          x_(DiagonalPhases::Kind::XKick, c.n_sites, c.j_x, c.effective_h_x(), c.tau,
             std::ldexp(1.0, -c.n_sites)) {}

    void forward(std::span<Amplitude> v) const {
        z_.apply(v, false);
        walsh_hadamard(v);
        x_.apply(v, false);
        walsh_hadamard(v);
    }

    void inverse(std::span<Amplitude> v) const {
        walsh_hadamard(v);
        x_.apply(v, true);
        walsh_hadamard(v);
        z_.apply(v, true);
    }

   private:
    DiagonalPhases z_;
    DiagonalPhases x_;
};

}  // namespace detail

FloquetMap::FloquetMap(const ModelConfig& config, Direction direction)
    : config_(config), direction_(direction) {
    config_.validate();
    tables_ = std::make_shared<const detail::KickTables>(config_);
}

FloquetMap::FloquetMap(const ModelConfig& config, Direction direction,
                       std::shared_ptr<const detail::KickTables> tables)
    : config_(config), direction_(direction), tables_(std::move(tables)) {}

FloquetMap FloquetMap::inverse() const {
    return FloquetMap(config_,
                      direction_ == Direction::Forward ? Direction::Inverse : Direction::Forward,
                      tables_);
}

void FloquetMap::apply_in_place(StateVector& state) const { apply_in_place(state, 1); }

void FloquetMap::apply_in_place(StateVector& state, int n) const {
    if (state.n_sites() != config_.n_sites) {
        throw DimensionError("Floquet map on " + std::to_string(config_.n_sites) +
                             " sites applied to a state on " + std::to_string(state.n_sites()));
    }
    if (n < 0) {
        throw ConfigError("kick count must be non-negative, got " + std::to_string(n));
    }
    auto v = state.amplitudes();
    for (int k = 0; k < n; ++k) {
        if (direction_ == Direction::Forward) {
            tables_->forward(v);
        } else {
            tables_->inverse(v);
        }
    }
}

StateVector apply_floquet(StateVector state, const FloquetMap& map) {
    map.apply_in_place(state);
    return state;
}

StateVector evolve_n_kicks(StateVector state, const FloquetMap& map, int n) {
    map.apply_in_place(state, n);
    return state;
}

}  // namespace floq
