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

#include <cmath>

#include "dense_oracle.hpp"
#include "doctest.h"
#include "floq/error.hpp"
#include "floq/floquet.hpp"

using namespace floq;
using floq::testing::max_deviation;
using floq::testing::to_eigen;

namespace {

double max_diff(const StateVector& a, const StateVector& b) {
    double worst = 0.0;
    for (std::size_t s = 0; s < a.dim(); ++s) worst = std::max(worst, std::abs(a[s] - b[s]));
    return worst;
}

double site_expectation(const StateVector& v, int site, Axis axis) {
    return inner_product(v, apply_pauli(v, {site, axis})).real();
}

}  // namespace

TEST_SUITE("floquet-evolution") {
    TEST_CASE("zero period is the identity for both variants") {
        const StateVector v = build_initial_state(InitialState::haar(1), 6);
        for (const auto& c :
             {ModelConfig::integrable(6, 0.0), ModelConfig::nonintegrable(6, 0.0)}) {
            CHECK(max_diff(apply_floquet(v, FloquetMap(c)), v) < 1e-14);
        }
    }

    TEST_CASE("forward then inverse restores a random N=10 state") {
        const StateVector v = build_initial_state(InitialState::haar(2), 10);
        const FloquetMap map(ModelConfig::nonintegrable(10, 0.4));
        CHECK(max_diff(apply_floquet(apply_floquet(v, map), map.inverse()), v) < 1e-12);
        const FloquetMap explicit_inverse(ModelConfig::nonintegrable(10, 0.4), Direction::Inverse);
        CHECK(max_diff(apply_floquet(apply_floquet(v, map), explicit_inverse), v) < 1e-12);
    }

    TEST_CASE("one kick matches the dense product of exponentials") {
        const double tau = std::numbers::pi / 56;
        const StateVector v = build_initial_state(InitialState::haar(3), 4);
        const ModelConfig nonint = ModelConfig::nonintegrable(4, tau);
        const floq::testing::Vector expected = floq::testing::floquet_matrix(nonint) * to_eigen(v);
        CHECK(max_deviation(apply_floquet(v, FloquetMap(nonint)), expected) < 1e-12);

        for (int n = 2; n <= 6; ++n) {
            const ModelConfig c = ModelConfig::nonintegrable(n, 0.29, 0.8, 0.6, 1.2);
            const StateVector w =
                build_initial_state(InitialState::haar(40 + static_cast<std::uint64_t>(n)), n);
            const auto dense = floq::testing::floquet_matrix(c);
            CHECK(max_deviation(apply_floquet(w, FloquetMap(c)), dense * to_eigen(w)) < 1e-12);
            CHECK(max_deviation(apply_floquet(w, FloquetMap(c, Direction::Inverse)),
                                dense.adjoint() * to_eigen(w)) < 1e-12);
        }
    }

    TEST_CASE("zero kicks leave the state unchanged") {
        const StateVector v = build_initial_state(InitialState::haar(4), 5);
        CHECK(evolve_n_kicks(v, FloquetMap(ModelConfig::integrable(5, 0.3)), 0) == v);
    }

    TEST_CASE("five kicks forward and five back restore the state") {
        const StateVector v = build_initial_state(InitialState::haar(5), 8);
        const FloquetMap map(ModelConfig::nonintegrable(8, 0.5));
        CHECK(max_diff(evolve_n_kicks(evolve_n_kicks(v, map, 5), map.inverse(), 5), v) < 1e-11);
    }

    TEST_CASE("z kick acts first: one kick on all-up is a phase then the x kick") {
        const double tau = 0.21;
        const StateVector up = build_initial_state(InitialState::all_up(), 3);
        StateVector phased = up;
        phased[0] *= std::polar(1.0, -3.0 * tau);
        const StateVector expected = apply_x_basis_kick(phased, 1.0, 0.0, tau);
        const StateVector got = evolve_n_kicks(up, FloquetMap(ModelConfig::integrable(3, tau)), 1);
        CHECK(max_diff(got, expected) < 1e-15);
    }

    TEST_CASE("norm drift stays below 1e-12 over 1000 kicks") {
        StateVector v = build_initial_state(InitialState::haar(6), 10);
        const FloquetMap map(ModelConfig::nonintegrable(10, 0.3));
        double worst_step = 0.0;
        for (int k = 0; k < 1000; ++k) {
            const double before = v.norm();
            map.apply_in_place(v);
            worst_step = std::max(worst_step, std::abs(v.norm() - before));
        }
        CHECK(worst_step < 1e-14);
        CHECK(std::abs(v.norm() - 1.0) < 1e-12);
    }

    TEST_CASE("site expectations stay uniform for translation-invariant initial states") {
        for (const auto& init : {InitialState::all_up(), InitialState::all_right()}) {
            StateVector v = build_initial_state(init, 9);
            const FloquetMap map(ModelConfig::nonintegrable(9, 0.35));
            map.apply_in_place(v, 7);
            for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
                const double reference = site_expectation(v, 0, axis);
                for (int site = 1; site < 9; ++site) {
                    CHECK(std::abs(site_expectation(v, site, axis) - reference) < 1e-12);
                }
            }
        }
    }

    TEST_CASE("nonintegrable map with h_x = 0 reproduces the integrable map bitwise") {
        const StateVector v = build_initial_state(InitialState::haar(7), 9);
        const StateVector a = evolve_n_kicks(v, FloquetMap(ModelConfig::integrable(9, 0.2)), 4);
        const StateVector b =
            evolve_n_kicks(v, FloquetMap(ModelConfig::nonintegrable(9, 0.2, 1.0, 0.0, 1.0)), 4);
        CHECK(a == b);
    }

    TEST_CASE("dimension mismatch and negative kick counts are rejected") {
        const FloquetMap map(ModelConfig::integrable(6, 0.2));
        CHECK_THROWS_AS(apply_floquet(build_initial_state(InitialState::all_up(), 5), map),
                        DimensionError);
        CHECK_THROWS_AS(evolve_n_kicks(build_initial_state(InitialState::all_up(), 6), map, -1),
                        ConfigError);
    }

    TEST_CASE("integrable variant rejects a longitudinal field") {
        ModelConfig c = ModelConfig::integrable(6, 0.2);
        c.h_x = 0.5;
        CHECK_THROWS_AS(FloquetMap{c}, ConfigError);
        c.h_x = 0.0;
        c.tau = -0.1;
        CHECK_THROWS_AS(FloquetMap{c}, ConfigError);
    }
}
