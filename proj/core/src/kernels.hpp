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

#ifndef FLOQ_SRC_KERNELS_HPP
#define FLOQ_SRC_KERNELS_HPP

#include <bit>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "floq/state_vector.hpp"

namespace floq::detail {

/// Full 2^N phase tables are stored up to this many entries; above it phases are looked up
/// through popcount-indexed tables. Both paths read the same numbers.
inline constexpr std::size_t kMaxPhaseTableEntries = std::size_t{1} << 20;

inline int popcount(std::uint64_t s) noexcept { return std::popcount(s); }

/// Number of antiparallel bonds of the ring in bit pattern s (bond l couples l and l+1 mod N).
inline int ring_domain_walls(std::uint64_t s, int n_sites) noexcept {
    const std::uint64_t mask = (n_sites == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_sites) - 1);
    const std::uint64_t rotated = ((s >> 1) | (s << (n_sites - 1))) & mask;
    return popcount((s ^ rotated) & mask);
}

/// Sum of term(i) for i in [begin, end) over a fixed binary tree with leaves of 32 terms.
/// The tree depends only on the range, never on scheduling.
template <typename T, typename Term>
T pairwise_reduce(std::size_t begin, std::size_t end, const Term& term) {
    constexpr std::size_t kLeaf = 32;
    if (end - begin <= kLeaf) {
        T acc{};
        for (std::size_t i = begin; i < end; ++i) acc += term(i);
        return acc;
    }
    const std::size_t mid = begin + (end - begin) / 2;
    return pairwise_reduce<T>(begin, mid, term) + pairwise_reduce<T>(mid, end, term);
}

template <typename T>
T pairwise_sum(std::span<const T> values) {
    return pairwise_reduce<T>(0, values.size(), [&](std::size_t i) { return values[i]; });
}

/// In-place unnormalized Walsh-Hadamard transform (H⊗N scaled by 2^{N/2}).
void walsh_hadamard(std::span<Amplitude> v);

/// v[s] *= phases[s] (or its conjugate), in plain real arithmetic.
void multiply_elementwise(std::span<Amplitude> v, std::span<const Amplitude> phases,
                          bool conjugate);

/// exp(-iτ h_z (N - 2k)) for popcount k = 0..N.
std::vector<Amplitude> z_phases_by_popcount(int n_sites, double h_z, double tau);

/// exp(-iτ (J_x (N - 2w) + h_x (N - 2k))) · scale, indexed [w * (N+1) + k], where w counts
/// domain walls and k set bits of an x-basis index.
std::vector<Amplitude> x_phases_by_counts(int n_sites, double j_x, double h_x, double tau,
                                          double scale);

/// Diagonal phases for one kick: either a full 2^N table or counts-indexed lookups.
class DiagonalPhases {
   public:
    enum class Kind { ZKick, XKick };

    DiagonalPhases(Kind kind, int n_sites, double coupling, double field, double tau,
                   double scale = 1.0);

    /// v[s] *= phase(s), or conj(phase(s)) when `conjugate`.
    void apply(std::span<Amplitude> v, bool conjugate) const;

    Amplitude at(std::uint64_t s) const noexcept;

   private:
    Amplitude lookup(std::uint64_t s) const noexcept;

    Kind kind_;
    int n_sites_;
    std::vector<Amplitude> small_;
    std::vector<Amplitude> full_;
};

}  // namespace floq::detail

#endif  // FLOQ_SRC_KERNELS_HPP
