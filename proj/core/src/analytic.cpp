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

#include "floq/analytic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "floq/error.hpp"
#include "floq/model_config.hpp"

namespace floq {

namespace {

using cplx = std::complex<double>;
using Mat2 = std::array<cplx, 4>;  // row-major

constexpr double kDomainSlack = 1e-12;
constexpr double kSingular = 1e-12;

Mat2 mul(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat2 pair_floquet_matrix(double q, double tau) {
    const double c = std::cos(2 * tau);
    const double s = std::sin(2 * tau);
    const cplx i{0.0, 1.0};
    // exp(-2iτ n·σ) with n = (0, sin q, cos q): cos 2τ - i sin 2τ (sin q σ_y + cos q σ_z).
    const Mat2 hopping{c - i * s * std::cos(q), -s * std::sin(q),
                       s * std::sin(q), c + i * s * std::cos(q)};
    const Mat2 kick{std::polar(1.0, -2 * tau), 0.0, 0.0, std::polar(1.0, 2 * tau)};
    return mul(hopping, kick);
}

// Unit eigenvector of m for eigenvalue lambda, phased so that component 1 is real >= 0.
std::array<cplx, 2> eigenvector(const Mat2& m, cplx lambda, int fallback_basis) {
    std::array<cplx, 2> v;
    if (std::abs(m[1]) > kSingular) {
        v = {m[1], lambda - m[0]};
    } else if (std::abs(m[2]) > kSingular) {
        v = {lambda - m[3], m[2]};
    } else if (std::abs(m[0] - lambda) < kSingular && std::abs(m[3] - lambda) < kSingular) {
        v = fallback_basis == 0 ? std::array<cplx, 2>{1.0, 0.0} : std::array<cplx, 2>{0.0, 1.0};
    } else {
        v = std::abs(m[0] - lambda) < std::abs(m[3] - lambda) ? std::array<cplx, 2>{1.0, 0.0}
                                                              : std::array<cplx, 2>{0.0, 1.0};
    }
    const double len = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
    v[0] /= len;
    v[1] /= len;
    if (std::abs(v[1]) > 0.0) {
        const cplx phase = std::conj(v[1]) / std::abs(v[1]);
        v[0] *= phase;
        v[1] *= phase;
    }
    return v;
}

}  // namespace

MomentumGrid MomentumGrid::even_sector(int n_sites) {
    if (n_sites < 2) throw ConfigError("momentum grid needs at least 2 sites");
    if (n_sites % 2 != 0) {
        throw UnsupportedError("closed-form OTOC requires even N, got " + std::to_string(n_sites));
    }
    MomentumGrid grid;
    grid.n_sites = n_sites;
    grid.momenta.resize(static_cast<std::size_t>(n_sites));
    const double n = n_sites;
    for (int k = 0; k < n_sites; ++k) {
        grid.momenta[k] = std::numbers::pi * (2.0 * k - (n - 1.0)) / n;
    }
    return grid;
}

PairCoefficients pair_coefficients_from_eigensystem(double q, double tau) {
    const Mat2 m = pair_floquet_matrix(q, tau);
    // M is in SU(2): M = [[a, b], [-b*, a*]], so cos γ = Re a and sin γ = |(Im a, b)|.
    PairCoefficients out;
    out.gamma = std::atan2(std::hypot(m[0].imag(), std::abs(m[1])), m[0].real());
    const cplx i{0.0, 1.0};
    // '+' belongs to e^{-iγ}, '-' to e^{+iγ}. When the two coincide (M = ±1) the basis
    // vectors are used: |1⟩ for '+', |0⟩ for '-'.
    const auto vp = eigenvector(m, std::polar(1.0, -out.gamma), 1);
    const auto vm = eigenvector(m, std::polar(1.0, out.gamma), 0);
    out.alpha_plus = vp[1].real();
    out.alpha_minus = vm[1].real();
    out.beta_plus = i * std::conj(vp[0]);
    out.beta_minus = i * std::conj(vm[0]);
    return out;
}

AnalyticTables build_tables(int n_sites, double tau, QuasiEnergyForm form) {
    AnalyticTables t;
    t.tau = tau;
    t.form = form;
    t.grid = MomentumGrid::even_sector(n_sites);
    const std::size_t count = t.grid.momenta.size();
    t.gamma.resize(count);
    t.alpha_plus.resize(count);
    t.alpha_minus.resize(count);
    t.beta_plus.resize(count);
    t.beta_minus.resize(count);

    const double c2 = std::cos(2 * tau);
    const double s2 = std::sin(2 * tau);
    const double c_second = form == QuasiEnergyForm::Symmetric ? c2 : std::cos(4 * tau);
    const cplx kick_phase = std::polar(1.0, -2 * tau);

    for (std::size_t k = 0; k < count; ++k) {
        const double q = t.grid.momenta[k];
        const double cos_gamma = c2 * c_second - std::cos(q) * s2 * s2;
        if (std::abs(cos_gamma) > 1.0 + kDomainSlack) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "cos(gamma_q) = " << cos_gamma << " outside [-1, 1] at q = " << q
                << ", tau = " << tau;
            throw DomainError(msg.str());
        }
        // Symmetric form: 1 - cos γ = sin²2τ (1 + cos q), so sin(γ/2) = |sin 2τ cos(q/2)|.
        const double gamma =
            form == QuasiEnergyForm::Symmetric
                ? 2.0 * std::asin(std::min(1.0, std::abs(s2 * std::cos(q / 2.0))))
                : std::acos(std::clamp(cos_gamma, -1.0, 1.0));
        const double sq = std::sin(q);
        if (std::abs(sq) < kSingular || std::abs(s2) < kSingular) {
            const PairCoefficients pc = pair_coefficients_from_eigensystem(q, tau);
            t.gamma[k] = gamma;
            t.alpha_plus[k] = pc.alpha_plus;
            t.alpha_minus[k] = pc.alpha_minus;
            t.beta_plus[k] = pc.beta_plus;
            t.beta_minus[k] = pc.beta_minus;
            continue;
        }
        const double denom = sq * s2 * s2;
        // cos 2τ - cos(γ ± 2τ) as products, exact for small τ.
        const double rp = 2.0 * std::sin(gamma / 2.0 + 2 * tau) * std::sin(gamma / 2.0) / denom;
        const double rm = 2.0 * std::sin(gamma / 2.0 - 2 * tau) * std::sin(gamma / 2.0) / denom;
        const double ap = 1.0 / std::sqrt(1.0 + rp * rp);
        const double am = 1.0 / std::sqrt(1.0 + rm * rm);
        const double common = c2 * s2 * (std::cos(q) + 1.0);
        const double bden = sq * s2;
        t.gamma[k] = gamma;
        t.alpha_plus[k] = ap;
        t.alpha_minus[k] = am;
        t.beta_plus[k] = (-std::sin(gamma) - common) / bden * ap * kick_phase;
        t.beta_minus[k] = (std::sin(gamma) - common) / bden * am * kick_phase;
    }
    return t;
}

PhiPsi phi_psi(const AnalyticTables& tables, int n) {
    const std::size_t count = tables.gamma.size();
    PhiPsi out;
    out.phi.resize(count);
    out.psi.resize(count);
    for (std::size_t k = 0; k < count; ++k) {
        const cplx down = std::polar(1.0, -n * tables.gamma[k]);
        const cplx up = std::polar(1.0, n * tables.gamma[k]);
        const double ap = tables.alpha_plus[k];
        const double am = tables.alpha_minus[k];
        out.phi[k] = ap * ap * down + am * am * up;
        out.psi[k] = ap * tables.beta_plus[k] * down + am * tables.beta_minus[k] * up;
    }
    return out;
}

std::complex<double> analytic_tmotoc(const AnalyticTables& tables, int delta_l, int n) {
    const int n_sites = tables.grid.n_sites;
    if (delta_l < 1 || delta_l > n_sites - 1) {
        throw ConfigError("delta_l must be in [1, N-1], got " + std::to_string(delta_l));
    }
    const PhiPsi pp = phi_psi(tables, n);
    const auto& q = tables.grid.momenta;
    const std::size_t count = q.size();

    cplx phi_plus{}, phi_minus{}, psi_plus{}, psi_minus{};  // Σ e^{±iqd}(...)
    cplx phi_psi_mirror{}, psi_phi_mirror{};
    double psi_norm = 0.0, phi_norm = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
        const cplx wave = std::polar(1.0, q[k] * delta_l);
        const std::size_t mk = tables.grid.mirror(k);
        phi_plus += wave * std::conj(pp.phi[k]);
        phi_minus += std::conj(wave) * pp.phi[k];
        psi_plus += wave * pp.psi[k];
        psi_minus += std::conj(wave) * std::conj(pp.psi[k]);
        phi_psi_mirror += std::conj(pp.phi[k]) * pp.psi[mk];
        psi_phi_mirror += std::conj(pp.psi[k]) * pp.phi[mk];
        psi_norm += std::norm(pp.psi[k]);
        phi_norm += std::norm(pp.phi[k]);
    }
    const cplx t1 = phi_plus * phi_minus * psi_norm;
    const cplx t2 = psi_minus * phi_minus * phi_psi_mirror;
    const cplx t3 = phi_plus * psi_plus * psi_phi_mirror;
    const cplx t4 = psi_plus * psi_minus * phi_norm;
    const double scale = std::pow(2.0 / n_sites, 3);
    return 1.0 - scale * (t1 - t2 - t3 + t4);
}

std::complex<double> analytic_tmotoc_direct(const AnalyticTables& tables, int delta_l, int n) {
    const int n_sites = tables.grid.n_sites;
    if (delta_l < 1 || delta_l > n_sites - 1) {
        throw ConfigError("delta_l must be in [1, N-1], got " + std::to_string(delta_l));
    }
    const PhiPsi pp = phi_psi(tables, n);
    const auto& mom = tables.grid.momenta;
    const std::size_t count = mom.size();
    const double d = delta_l;
    cplx sum{};
    for (std::size_t p = 0; p < count; ++p) {
        for (std::size_t q = 0; q < count; ++q) {
            for (std::size_t r = 0; r < count; ++r) {
                const cplx phi_p_c = std::conj(pp.phi[p]);
                const cplx psi_r_c = std::conj(pp.psi[r]);
                sum += std::polar(1.0, (mom[p] - mom[q]) * d) * std::norm(pp.psi[r]) * phi_p_c *
                       pp.phi[q];
                sum -= std::polar(1.0, (-mom[r] - mom[q]) * d) * psi_r_c * phi_p_c * pp.phi[q] *
                       pp.psi[tables.grid.mirror(p)];
                sum -= std::polar(1.0, (mom[p] + mom[q]) * d) * pp.psi[q] * psi_r_c * phi_p_c *
                       pp.phi[tables.grid.mirror(r)];
                sum += std::polar(1.0, (mom[q] - mom[r]) * d) * pp.psi[q] * psi_r_c *
                       std::norm(pp.phi[p]);
            }
        }
    }
    return 1.0 - std::pow(2.0 / n_sites, 3) * sum;
}

std::vector<std::complex<double>> analytic_tmotoc_series(const AnalyticTables& tables,
                                                         int delta_l, std::span<const int> kicks) {
    std::vector<std::complex<double>> out;
    out.reserve(kicks.size());
    for (const int n : kicks) out.push_back(analytic_tmotoc(tables, delta_l, n));
    return out;
}

}  // namespace floq
