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
#include "floq/otoc.hpp"
#include "floq/regions.hpp"

using namespace floq;

namespace {

OtocRequest make_request(ModelConfig config, OtocAxis axis, int l, int m, int n_max) {
    OtocRequest r;
    r.config = config;
    r.axis = axis;
    r.l = l;
    r.m = m;
    r.n_max = n_max;
    return r;
}

// ⟨ψ| W(n) V W(n) V |ψ⟩ with W(n) = U^{-n} W U^n, all as dense matrices.
Amplitude dense_otoc(const OtocRequest& r, int n) {
    using floq::testing::Matrix;
    const int sites = r.config.n_sites;
    const Matrix u = floq::testing::floquet_matrix(r.config);
    Matrix u_n = Matrix::Identity(u.rows(), u.cols());
    for (int k = 0; k < n; ++k) u_n = u * u_n;
    const Axis axis = observable_axis(r.axis);
    const Matrix w = floq::testing::pauli_matrix(sites, r.l, axis);
    const Matrix v = floq::testing::pauli_matrix(sites, r.m, axis);
    const Matrix w_n = u_n.adjoint() * w * u_n;
    const auto psi = floq::testing::to_eigen(build_initial_state(r.effective_initial(), sites));
    return psi.dot(w_n * v * w_n * v * psi);
}

}  // namespace

TEST_SUITE("otoc-engine") {
    TEST_CASE("F is exactly one at n = 0") {
        const OtocSeries s = compute_otoc_series(
            make_request(ModelConfig::nonintegrable(8, 0.3), OtocAxis::TM, 0, 3, 0));
        REQUIRE(s.size() == 1);
        CHECK(s.f_values[0] == Amplitude{1.0, 0.0});
        CHECK(s.c_values[0] == 0.0);
    }

    TEST_CASE("echo agrees with the dense Heisenberg-picture oracle") {
        for (const auto variant : {Variant::Integrable, Variant::Nonintegrable}) {
            for (const auto axis : {OtocAxis::TM, OtocAxis::LM}) {
                const ModelConfig c = variant == Variant::Integrable
                                          ? ModelConfig::integrable(6, 0.11)
                                          : ModelConfig::nonintegrable(6, 0.11);
                OtocRequest r = make_request(c, axis, 1, 3, 8);
                const OtocSeries s = compute_otoc_series(r);
                for (std::size_t k = 0; k < s.size(); ++k) {
                    CHECK(std::abs(s.f_values[k] - dense_otoc(r, s.kicks[k])) < 1e-10);
                }
                r.initial = InitialState::haar(9);
                r.n_max = 4;
                const OtocSeries h = compute_otoc_series(r);
                for (std::size_t k = 0; k < h.size(); ++k) {
                    CHECK(std::abs(h.f_values[k] - dense_otoc(r, h.kicks[k])) < 1e-10);
                }
            }
        }
    }

    TEST_CASE("adjacent TM pair after one integrable kick: C = 1 - cos 4τ") {
        for (double tau : {1e-3, 0.05, 0.3}) {
            const OtocRequest r =
                make_request(ModelConfig::integrable(8, tau), OtocAxis::TM, 2, 3, 1);
            const double c = 1.0 - otoc_at_kick(r, 1).real();
            CHECK(std::abs(c - (1.0 - std::cos(4.0 * tau))) < 1e-13);
        }
    }

    TEST_CASE("adjacent LM pair has not departed after one kick") {
        const OtocRequest r =
            make_request(ModelConfig::nonintegrable(8, 0.3), OtocAxis::LM, 0, 1, 1);
        CHECK(std::abs(1.0 - otoc_at_kick(r, 1).real()) < 1e-13);
    }

    TEST_CASE("N = 18 TM Δl = 6 at τ = 6ε/2 departs exactly at kick 6") {
        const OtocRequest r =
            make_request(ModelConfig::integrable(18, 6.0 * kEpsilon / 2.0), OtocAxis::TM, 0, 6, 6);
        const OtocSeries s = compute_otoc_series(r);
        for (int n = 0; n <= 5; ++n) CHECK(s.c_values[static_cast<std::size_t>(n)] <= 1e-10);
        CHECK(s.c_values[6] > 1e-10);
    }

    TEST_CASE("characteristic kick is Δl for TM and Δl + 1 for LM") {
        for (int n_sites : {8, 10}) {
            for (int k = 7; k <= 11; ++k) {
                const double tau = k * kEpsilon / 2.0;
                for (const auto& c : {ModelConfig::integrable(n_sites, tau),
                                      ModelConfig::nonintegrable(n_sites, tau)}) {
                    for (int dl = 2; dl <= 4; ++dl) {
                        for (const auto axis : {OtocAxis::TM, OtocAxis::LM}) {
                            const int expected = axis == OtocAxis::TM ? dl : dl + 1;
                            const OtocRequest r = make_request(c, axis, 1, 1 + dl, expected);
                            CHECK(detect_characteristic_kick(compute_otoc_series(r)) == expected);
                        }
                    }
                }
            }
        }
    }

    TEST_CASE("Haar initial states obey the same light cone") {
        const ModelConfig c = ModelConfig::nonintegrable(10, 9.0 * kEpsilon / 2.0);
        for (int dl = 2; dl <= 4; ++dl) {
            for (const auto axis : {OtocAxis::TM, OtocAxis::LM}) {
                OtocRequest r = make_request(c, axis, 0, dl, dl + 2);
                r.initial = InitialState::haar(11);
                const int expected = axis == OtocAxis::TM ? dl : dl + 1;
                CHECK(detect_characteristic_kick(compute_otoc_series(r)) == expected);
            }
        }
    }

    TEST_CASE("separations d and N - d give the same series") {
        for (const auto axis : {OtocAxis::TM, OtocAxis::LM}) {
            const ModelConfig c = ModelConfig::nonintegrable(10, 0.2);
            for (int d = 1; d <= 4; ++d) {
                const OtocSeries a = compute_otoc_series(make_request(c, axis, 0, d, 20));
                const OtocSeries b = compute_otoc_series(make_request(c, axis, 0, 10 - d, 20));
                for (std::size_t k = 0; k < a.size(); ++k) {
                    CHECK(std::abs(a.f_values[k] - b.f_values[k]) < 1e-10);
                }
            }
        }
    }

    TEST_CASE("incremental series matches evaluation from scratch") {
        OtocRequest r = make_request(ModelConfig::nonintegrable(8, 0.4), OtocAxis::LM, 2, 5, 40);
        r.stride = 7;
        r.dense_until = 5;
        const OtocSeries s = compute_otoc_series(r);
        for (std::size_t k = 0; k < s.size(); ++k) {
            CHECK(std::abs(s.f_values[k] - otoc_at_kick(r, s.kicks[k])) < 1e-12);
            CHECK(std::abs(s.f_values[k]) <= 1.0 + 1e-10);
        }
    }

    TEST_CASE("evaluation kicks are dense up to dense_until then strided") {
        OtocRequest r = make_request(ModelConfig::integrable(6, 0.1), OtocAxis::TM, 0, 1, 35);
        r.stride = 10;
        r.dense_until = 3;
        CHECK(evaluation_kicks(r) == std::vector<int>{0, 1, 2, 3, 10, 20, 30});
    }

    TEST_CASE("kick budget truncates the series and records the spend") {
        OtocRequest r = make_request(ModelConfig::integrable(6, 0.1), OtocAxis::TM, 0, 1, 10);
        r.kick_budget = 20;
        const OtocSeries s = compute_otoc_series(r);
        CHECK(s.truncated);
        CHECK(s.kicks_applied == 18);
        CHECK(s.size() == 4);
        r.kick_budget = 0;
        const OtocSeries full = compute_otoc_series(r);
        CHECK_FALSE(full.truncated);
        CHECK(full.kicks_applied == 130);
        for (std::size_t k = 0; k < s.size(); ++k) CHECK(s.f_values[k] == full.f_values[k]);
    }

    TEST_CASE("invalid observable sites are rejected") {
        const ModelConfig c = ModelConfig::integrable(6, 0.1);
        CHECK_THROWS_AS(compute_otoc_series(make_request(c, OtocAxis::TM, 0, 6, 3)), ConfigError);
        CHECK_THROWS_AS(compute_otoc_series(make_request(c, OtocAxis::TM, 2, 2, 3)), ConfigError);
        CHECK_THROWS_AS(compute_otoc_series(make_request(c, OtocAxis::TM, -1, 2, 3)), ConfigError);
        CHECK_THROWS_AS(otoc_at_kick(make_request(c, OtocAxis::TM, 0, 1, 3), -1), ConfigError);
    }
}
