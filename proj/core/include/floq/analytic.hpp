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

#ifndef FLOQ_ANALYTIC_HPP
#define FLOQ_ANALYTIC_HPP

#include <complex>
#include <span>
#include <vector>

namespace floq {

// Closed-form transverse-magnetization OTOC of the integrable kicked Ising ring at
// J_x = h_z = 1, starting from |↑↑…↑⟩. Everything here is a function of (N, τ) only.

/// Quasi-energy relation used for γ_q.
enum class QuasiEnergyForm {
    /// cos γ_q = cos(2τ)cos(2τ) - cos q sin(2τ)sin(2τ). Reproduces exact dynamics.
    Symmetric,
    /// cos γ_q = cos(2τ)cos(4τ) - cos q sin(2τ)sin(2τ). Does not match the echo engine.
    Mixed,
};

/// Even fermion-parity momenta q_k = -(N-1)π/N + 2πk/N, k = 0..N-1.
struct MomentumGrid {
    int n_sites = 0;
    std::vector<double> momenta;

    /// Throws UnsupportedError for odd N and ConfigError for N < 2.
    static MomentumGrid even_sector(int n_sites);

    /// Index of -q_k. The grid is symmetric, so this is N-1-k.
    std::size_t mirror(std::size_t k) const noexcept { return momenta.size() - 1 - k; }
};

struct AnalyticTables {
    double tau = 0.0;
    QuasiEnergyForm form = QuasiEnergyForm::Symmetric;
    MomentumGrid grid;
    std::vector<double> gamma;  ///< γ_q in [0, π]
    std::vector<double> alpha_plus;
    std::vector<double> alpha_minus;
    std::vector<std::complex<double>> beta_plus;
    std::vector<std::complex<double>> beta_minus;
};

/// Per-momentum expansion coefficients Φ_q(n), Ψ_q(n), indexed like grid.momenta.
struct PhiPsi {
    std::vector<std::complex<double>> phi;
    std::vector<std::complex<double>> psi;
};

/// α±(q), β±(q) from the eigenvectors of the per-pair Floquet matrix
/// M_q = exp[-2iτ(sin q σ_y + cos q σ_z)] exp[-2iτ σ_z], with eigenvalues e^{∓iγ_q}.
/// Used where the closed forms divide by zero (sin q = 0 or sin 2τ = 0).
struct PairCoefficients {
    double gamma = 0.0;
    double alpha_plus = 0.0;
    double alpha_minus = 0.0;
    std::complex<double> beta_plus;
    std::complex<double> beta_minus;
};
PairCoefficients pair_coefficients_from_eigensystem(double q, double tau);

/// Builds γ_q, α±, β± for every momentum of the even-sector grid.
///
/// Throws UnsupportedError for odd N and DomainError (naming q and τ) when
/// |cos γ_q| exceeds 1 by more than 1e-12.
AnalyticTables build_tables(int n_sites, double tau,
                            QuasiEnergyForm form = QuasiEnergyForm::Symmetric);

PhiPsi phi_psi(const AnalyticTables& tables, int n);

/// F_z(n) for observables separated by delta_l (1 <= delta_l <= N-1).
///
/// Each of the four terms of the triple momentum sum factorizes into single-momentum sums,
/// so this costs O(N) per kick.
std::complex<double> analytic_tmotoc(const AnalyticTables& tables, int delta_l, int n);

/// Same quantity by direct O(N³) summation over (p, q, r). Reference path for tests.
std::complex<double> analytic_tmotoc_direct(const AnalyticTables& tables, int delta_l, int n);

/// analytic_tmotoc at every kick in `kicks`.
std::vector<std::complex<double>> analytic_tmotoc_series(const AnalyticTables& tables,
                                                         int delta_l, std::span<const int> kicks);

}  // namespace floq

#endif  // FLOQ_ANALYTIC_HPP
