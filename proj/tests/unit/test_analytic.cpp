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

#include <array>
#include <cmath>
#include <numeric>

#include "doctest.h"
#include "floq/analytic.hpp"
#include "floq/error.hpp"
#include "floq/otoc.hpp"

using namespace floq;
using cplx = std::complex<double>;

namespace {

using Mat2 = std::array<cplx, 4>;  // row-major

Mat2 mul(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

// exp(-iθ (ny σy + nz σz)) for a unit vector (ny, nz).
Mat2 rotation(double theta, double ny, double nz) {
    const cplx c{std::cos(theta), 0.0};
    const cplx s{0.0, -std::sin(theta)};
    return {c + s * nz, s * cplx{0.0, -ny}, s * cplx{0.0, ny}, c - s * nz};
}

OtocRequest tm_request(int n_sites, double tau, int delta_l, int n_max) {
    OtocRequest r;
    r.config = ModelConfig::integrable(n_sites, tau);
    r.axis = OtocAxis::TM;
    r.l = 0;
    r.m = delta_l;
    r.n_max = n_max;
    return r;
}

}  // namespace

TEST_SUITE("analytic-integrable") {
    TEST_CASE("momentum grid is symmetric and avoids q = 0 and q = π") {
        const MomentumGrid g = MomentumGrid::even_sector(8);
        REQUIRE(g.momenta.size() == 8);
        CHECK(std::abs(g.momenta[0] + 7.0 * std::numbers::pi / 8.0) < 1e-15);
        for (std::size_t k = 0; k < 8; ++k) {
            CHECK(std::abs(g.momenta[g.mirror(k)] + g.momenta[k]) < 1e-14);
            CHECK(std::abs(std::sin(g.momenta[k])) > 0.1);
        }
    }

    TEST_CASE("odd and tiny chains are rejected") {
        CHECK_THROWS_AS(MomentumGrid::even_sector(7), UnsupportedError);
        CHECK_THROWS_AS(build_tables(9, 0.1), UnsupportedError);
        CHECK_THROWS_AS(MomentumGrid::even_sector(1), ConfigError);
        CHECK_THROWS_AS(analytic_tmotoc(build_tables(8, 0.1), 8, 3), ConfigError);
    }

    TEST_CASE("quasi-energies lie in [0, π] and satisfy the symmetric relation") {
        const double tau = std::numbers::pi / 28;
        const AnalyticTables t = build_tables(10, tau);
        for (std::size_t k = 0; k < t.gamma.size(); ++k) {
            const double q = t.grid.momenta[k];
            const double expected = std::cos(2 * tau) * std::cos(2 * tau) -
                                    std::cos(q) * std::sin(2 * tau) * std::sin(2 * tau);
            CHECK(t.gamma[k] >= 0.0);
            CHECK(t.gamma[k] <= std::numbers::pi);
            CHECK(std::abs(std::cos(t.gamma[k]) - expected) < 1e-14);
        }
    }

    TEST_CASE("Φ(0) = 1 and Ψ(0) = 0 for every momentum") {
        const PhiPsi pp = phi_psi(build_tables(12, 0.2), 0);
        for (std::size_t k = 0; k < pp.phi.size(); ++k) {
            CHECK(std::abs(pp.phi[k] - cplx{1.0, 0.0}) < 1e-14);
            CHECK(std::abs(pp.psi[k]) < 1e-14);
        }
    }

    TEST_CASE("Φ and Ψ equal entries of the per-momentum 2x2 Floquet matrix power") {
        const int n_sites = 8;
        const double tau = std::numbers::pi / 56;
        const AnalyticTables t = build_tables(n_sites, tau);
        for (int n : {1, 4, 10}) {
            const PhiPsi pp = phi_psi(t, n);
            for (std::size_t k = 0; k < t.grid.momenta.size(); ++k) {
                const double q = t.grid.momenta[k];
                const Mat2 m =
                    mul(rotation(2 * tau, std::sin(q), std::cos(q)), rotation(2 * tau, 0.0, 1.0));
                Mat2 power{1.0, 0.0, 0.0, 1.0};
                for (int step = 0; step < n; ++step) power = mul(m, power);
                CHECK(std::abs(pp.phi[k] - power[3]) < 1e-12);
                CHECK(std::abs(pp.psi[k] - cplx{0.0, 1.0} * power[2]) < 1e-12);
                CHECK(std::norm(pp.phi[k]) + std::norm(pp.psi[k]) ==
                      doctest::Approx(1.0).epsilon(1e-12));
            }
        }
    }

    TEST_CASE("eigensystem coefficients agree with the closed forms") {
        const AnalyticTables t = build_tables(10, 0.13);
        for (std::size_t k = 0; k < t.grid.momenta.size(); ++k) {
            const PairCoefficients pc = pair_coefficients_from_eigensystem(t.grid.momenta[k], 0.13);
            CHECK(std::abs(pc.gamma - t.gamma[k]) < 1e-12);
            CHECK(std::abs(pc.alpha_plus - t.alpha_plus[k]) < 1e-12);
            CHECK(std::abs(pc.alpha_minus - t.alpha_minus[k]) < 1e-12);
            CHECK(std::abs(pc.beta_plus - t.beta_plus[k]) < 1e-12);
            CHECK(std::abs(pc.beta_minus - t.beta_minus[k]) < 1e-12);
        }
    }

    TEST_CASE("closed form matches the echo engine") {
        for (int n_sites : {6, 8, 10}) {
            for (double tau :
                 {std::numbers::pi / 56, std::numbers::pi / 28, 3 * std::numbers::pi / 56}) {
                const AnalyticTables t = build_tables(n_sites, tau);
                for (int dl = 1; dl < n_sites; ++dl) {
                    const OtocSeries echo = compute_otoc_series(tm_request(n_sites, tau, dl, 30));
                    for (std::size_t k = 0; k < echo.size(); ++k) {
                        CHECK(std::abs(analytic_tmotoc(t, dl, echo.kicks[k]) - echo.f_values[k]) <
                              1e-8);
                    }
                }
            }
        }
    }

    TEST_CASE("factorized and direct triple sums agree") {
        const AnalyticTables t = build_tables(10, 0.21);
        for (int dl = 1; dl < 10; ++dl) {
            for (int n : {0, 1, 7, 25}) {
                CHECK(std::abs(analytic_tmotoc(t, dl, n) - analytic_tmotoc_direct(t, dl, n)) <
                      1e-12);
            }
        }
    }

    TEST_CASE("series evaluation equals pointwise evaluation") {
        const AnalyticTables t = build_tables(12, 0.3);
        std::vector<int> kicks(20);
        std::iota(kicks.begin(), kicks.end(), 0);
        const auto series = analytic_tmotoc_series(t, 3, kicks);
        for (std::size_t k = 0; k < kicks.size(); ++k) {
            CHECK(series[k] == analytic_tmotoc(t, 3, kicks[k]));
        }
    }

    TEST_CASE("reflection symmetry Δl -> N - Δl") {
        const AnalyticTables t = build_tables(14, std::numbers::pi / 28);
        for (int dl = 1; dl < 7; ++dl) {
            for (int n : {3, 15, 60}) {
                CHECK(std::abs(analytic_tmotoc(t, dl, n) - analytic_tmotoc(t, 14 - dl, n)) < 1e-12);
            }
        }
    }

    TEST_CASE("vanishing period leaves F at one") {
        const AnalyticTables t = build_tables(8, 1e-9);
        for (int n : {1, 5, 20}) CHECK(std::abs(analytic_tmotoc(t, 2, n) - cplx{1.0, 0.0}) < 1e-12);
        const AnalyticTables zero = build_tables(8, 0.0);
        CHECK(std::abs(analytic_tmotoc(zero, 2, 9) - cplx{1.0, 0.0}) < 1e-12);
    }

    TEST_CASE("N = 18 closed form stays at one before kick Δl") {
        const AnalyticTables t = build_tables(18, 6.0 * kEpsilon / 2.0);
        for (int n = 0; n < 6; ++n) CHECK(1.0 - analytic_tmotoc(t, 6, n).real() <= 1e-10);
        CHECK(1.0 - analytic_tmotoc(t, 6, 6).real() > 1e-10);
    }

    TEST_CASE("mixed cos 4τ quasi-energy relation leaves the real domain at large τ") {
        CHECK_THROWS_AS(build_tables(12, 0.9, QuasiEnergyForm::Mixed), DomainError);
        CHECK_NOTHROW(build_tables(12, 0.9, QuasiEnergyForm::Symmetric));
    }
}
