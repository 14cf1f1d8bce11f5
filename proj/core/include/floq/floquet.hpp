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

#ifndef FLOQ_FLOQUET_HPP
#define FLOQ_FLOQUET_HPP

#include <memory>

#include "floq/model_config.hpp"
#include "floq/state_vector.hpp"

namespace floq {

namespace detail {
class KickTables;
}

enum class Direction { Forward, Inverse };

/// One period of the kicked Ising evolution, U = U_xx U_z, or its adjoint.
///
/// The z kick is the rightmost factor and therefore acts first on a ket. The inverse map
/// applies U_xx^† and then U_z^†. Phase tables are built once per map and shared between
/// copies and the inverse.
class FloquetMap {
   public:
    explicit FloquetMap(const ModelConfig& config, Direction direction = Direction::Forward);

    const ModelConfig& config() const noexcept { return config_; }
    Direction direction() const noexcept { return direction_; }

    FloquetMap inverse() const;

    /// One kick in place. Throws DimensionError on a site-count mismatch.
    void apply_in_place(StateVector& state) const;

    /// `n` kicks in place.
    void apply_in_place(StateVector& state, int n) const;

   private:
    FloquetMap(const ModelConfig& config, Direction direction,
               std::shared_ptr<const detail::KickTables> tables);

    ModelConfig config_;
    Direction direction_;
    std::shared_ptr<const detail::KickTables> tables_;
};

StateVector apply_floquet(StateVector state, const FloquetMap& map);

/// n successive kicks; n = 0 is the identity. Throws ConfigError for n < 0.
StateVector evolve_n_kicks(StateVector state, const FloquetMap& map, int n);

}  // namespace floq

#endif  // FLOQ_FLOQUET_HPP
