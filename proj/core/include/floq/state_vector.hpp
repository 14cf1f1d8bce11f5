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

#ifndef FLOQ_STATE_VECTOR_HPP
#define FLOQ_STATE_VECTOR_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace floq {

using Amplitude = std::complex<double>;

enum class Axis { X, Y, Z };

/// A single-site Pauli operator σ_axis acting on `site`.
struct SiteObservable {
    int site = 0;
    Axis axis = Axis::Z;
};

/// Recipe for an initial state. HaarRandom is reproducible from `seed`.
struct InitialState {
    enum class Kind { AllUpZ, AllRightX, HaarRandom };

    Kind kind = Kind::AllUpZ;
    std::uint64_t seed = 0;

    static constexpr InitialState all_up() { return {Kind::AllUpZ, 0}; }
    static constexpr InitialState all_right() { return {Kind::AllRightX, 0}; }
    static constexpr InitialState haar(std::uint64_t seed) { return {Kind::HaarRandom, seed}; }

    friend bool operator==(const InitialState&, const InitialState&) = default;
};

/// 2^N complex amplitudes of an N-site spin-1/2 ring in the σ_z product basis.
///
/// Bit l of a basis index is site l (site 0 is the least significant bit); a clear bit is
/// spin up (σ_z = +1), a set bit is spin down (σ_z = -1).
class StateVector {
   public:
    /// All-zero vector on `n_sites` sites.
    explicit StateVector(int n_sites);
    StateVector(int n_sites, std::vector<Amplitude> amplitudes);

    int n_sites() const noexcept { return n_sites_; }
    std::size_t dim() const noexcept { return amplitudes_.size(); }

    std::span<Amplitude> amplitudes() noexcept { return amplitudes_; }
    std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }

    Amplitude& operator[](std::size_t index) { return amplitudes_[index]; }
    const Amplitude& operator[](std::size_t index) const { return amplitudes_[index]; }

    /// L2 norm, accumulated pairwise.
    double norm() const;

    friend bool operator==(const StateVector&, const StateVector&) = default;

   private:
    int n_sites_;
    std::vector<Amplitude> amplitudes_;
};

StateVector build_initial_state(const InitialState& kind, int n_sites);

/// Applies σ_axis on obs.site. Exact: only permutes amplitudes and multiplies by ±1, ±i.
StateVector apply_pauli(StateVector state, SiteObservable obs);

/// Multiplies amplitude s by exp(-iτ h_z m_z(s)), m_z(s) = N - 2 popcount(s).
StateVector apply_diagonal_z_kick(StateVector state, double h_z, double tau);

/// exp[-iτ (J_x Σ σx_l σx_{l+1} + h_x Σ σx_l)] on the periodic ring, via a Hadamard sandwich.
StateVector apply_x_basis_kick(StateVector state, double j_x, double h_x, double tau);

/// Normalized Hadamard on every site (z basis <-> x basis). An involution.
StateVector hadamard_all(StateVector state);

/// Σ_s conj(a_s) b_s. The summation tree depends only on dim(), never on threading.
Amplitude inner_product(const StateVector& a, const StateVector& b);

/// Cyclic relabelling of sites: site l of the input becomes site (l + shift) mod N.
StateVector rotate_sites(const StateVector& state, int shift);

}  // namespace floq

#endif  // FLOQ_STATE_VECTOR_HPP
