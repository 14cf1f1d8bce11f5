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

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <utility>

#include "floq/error.hpp"
#include "floq/model_config.hpp"
#include "floq/state_vector.hpp"
#include "kernels.hpp"

namespace floq {

namespace detail {

namespace {

// Butterflies on interleaved (re, im) doubles; `h` is the pair distance in doubles.
void radix2_pass(double* x, std::size_t len, std::size_t h) {
    for (std::size_t block = 0; block < len; block += 2 * h) {
        double* lo = x + block;
        double* hi = lo + h;
        for (std::size_t j = 0; j < h; ++j) {
            const double a = lo[j];
            const double b = hi[j];
            lo[j] = a + b;
            hi[j] = a - b;
        }
    }
}

// Two transform levels (h and 2h) in one sweep over memory.
void radix4_pass(double* x, std::size_t len, std::size_t h) {
    for (std::size_t block = 0; block < len; block += 4 * h) {
        double* p0 = x + block;
        double* p1 = p0 + h;
        double* p2 = p1 + h;
        double* p3 = p2 + h;
        for (std::size_t j = 0; j < h; ++j) {
            const double a = p0[j] + p1[j];
            const double b = p0[j] - p1[j];
            const double c = p2[j] + p3[j];
            const double d = p2[j] - p3[j];
            p0[j] = a + c;
            p1[j] = b + d;
            p2[j] = a - c;
            p3[j] = b - d;
        }
    }
}

// Levels h = 2 and h = 4 doubles (the two lowest site bits) on groups of four amplitudes.
void lowest_two_levels(double* x, std::size_t len) {
    for (std::size_t g = 0; g < len; g += 8) {
        double* p = x + g;
        const double ar = p[0] + p[2], ai = p[1] + p[3];
        const double br = p[0] - p[2], bi = p[1] - p[3];
        const double cr = p[4] + p[6], ci = p[5] + p[7];
        const double dr = p[4] - p[6], di = p[5] - p[7];
        p[0] = ar + cr;
        p[1] = ai + ci;
        p[2] = br + dr;
        p[3] = bi + di;
        p[4] = ar - cr;
        p[5] = ai - ci;
        p[6] = br - dr;
        p[7] = bi - di;
    }
}

// All levels with pair distance in [h_begin, h_end) doubles.
void transform_levels(double* x, std::size_t len, std::size_t h_begin, std::size_t h_end) {
    std::size_t h = h_begin;
    for (; 4 * h <= h_end; h *= 4) radix4_pass(x, len, h);
    if (h < h_end) radix2_pass(x, len, h);
}

// 2^11 amplitudes = 32 KiB, transformed in cache before the long-stride levels.
constexpr std::size_t kCacheBlock = std::size_t{1} << 11;

}  // namespace

void walsh_hadamard(std::span<Amplitude> v) {
    // std::complex<double> is layout-compatible with double[2].
    double* x = reinterpret_cast<double*>(v.data());
    const std::size_t len = 2 * v.size();
    const std::size_t block = 2 * std::min(v.size(), kCacheBlock);
    if (block >= 8) {
        for (std::size_t base = 0; base < len; base += block) {
            lowest_two_levels(x + base, block);
            transform_levels(x + base, block, 8, block);
        }
    } else {
        transform_levels(x, len, 2, block);
    }
    transform_levels(x, len, block, len);
}

void multiply_elementwise(std::span<Amplitude> v, std::span<const Amplitude> phases,
                          bool conjugate) {
    double* x = reinterpret_cast<double*>(v.data());
    const double* p = reinterpret_cast<const double*>(phases.data());
    const double sign = conjugate ? -1.0 : 1.0;
    const std::size_t dim = v.size();
    for (std::size_t s = 0; s < dim; ++s) {
        const double re = x[2 * s];
        const double im = x[2 * s + 1];
        const double pr = p[2 * s];
        const double pi = sign * p[2 * s + 1];
        x[2 * s] = re * pr - im * pi;
        x[2 * s + 1] = re * pi + im * pr;
    }
}

std::vector<Amplitude> z_phases_by_popcount(int n_sites, double h_z, double tau) {
    std::vector<Amplitude> out(static_cast<std::size_t>(n_sites) + 1);
    for (int k = 0; k <= n_sites; ++k) {
        const double m_z = n_sites - 2 * k;
        out[k] = std::polar(1.0, -tau * h_z * m_z);
    }
    return out;
}

std::vector<Amplitude> x_phases_by_counts(int n_sites, double j_x, double h_x, double tau,
                                          double scale) {
    const std::size_t stride = static_cast<std::size_t>(n_sites) + 1;
    std::vector<Amplitude> out(stride * stride);
    for (int w = 0; w <= n_sites; ++w) {
        for (int k = 0; k <= n_sites; ++k) {
            const double energy = j_x * (n_sites - 2 * w) + h_x * (n_sites - 2 * k);
            out[w * stride + k] = std::polar(scale, -tau * energy);
        }
    }
    return out;
}

DiagonalPhases::DiagonalPhases(Kind kind, int n_sites, double coupling, double field,
                               double tau, double scale)
    : kind_(kind), n_sites_(n_sites) {
    small_ = kind == Kind::ZKick ? z_phases_by_popcount(n_sites, field, tau)
                                 : x_phases_by_counts(n_sites, coupling, field, tau, scale);
    if (kind == Kind::ZKick && scale != 1.0) {
        for (Amplitude& p : small_) p *= scale;
    }
    const std::size_t dim = std::size_t{1} << n_sites;
    if (dim <= kMaxPhaseTableEntries) {
        full_.resize(dim);
        for (std::uint64_t s = 0; s < dim; ++s) full_[s] = lookup(s);
    }
}

Amplitude DiagonalPhases::at(std::uint64_t s) const noexcept {
    return full_.empty() ? lookup(s) : full_[s];
}

Amplitude DiagonalPhases::lookup(std::uint64_t s) const noexcept {
    if (kind_ == Kind::ZKick) return small_[popcount(s)];
    const std::size_t stride = static_cast<std::size_t>(n_sites_) + 1;
    return small_[ring_domain_walls(s, n_sites_) * stride + popcount(s)];
}

void DiagonalPhases::apply(std::span<Amplitude> v, bool conjugate) const {
    const std::size_t dim = v.size();
    if (!full_.empty()) {
        multiply_elementwise(v, full_, conjugate);
        return;
    }
    for (std::size_t s = 0; s < dim; ++s) {
        const Amplitude p = at(s);
        v[s] *= conjugate ? std::conj(p) : p;
    }
}

}  // namespace detail

namespace {

std::size_t dimension_for(int n_sites) {
    check_site_count(n_sites);
    return std::size_t{1} << n_sites;
}

void require_site(const StateVector& state, int site) {
    if (site < 0 || site >= state.n_sites()) {
        throw ConfigError("site " + std::to_string(site) + " out of range for " +
                          std::to_string(state.n_sites()) + " sites");
    }
}

}  // namespace

StateVector::StateVector(int n_sites)
    : n_sites_(n_sites), amplitudes_(dimension_for(n_sites)) {}

StateVector::StateVector(int n_sites, std::vector<Amplitude> amplitudes)
    : n_sites_(n_sites), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != dimension_for(n_sites)) {
        throw DimensionError("expected 2^" + std::to_string(n_sites) + " amplitudes, got " +
                             std::to_string(amplitudes_.size()));
    }
}

double StateVector::norm() const {
    const Amplitude* v = amplitudes_.data();
    return std::sqrt(detail::pairwise_reduce<double>(
        0, amplitudes_.size(), [v](std::size_t s) { return std::norm(v[s]); }));
}

StateVector build_initial_state(const InitialState& kind, int n_sites) {
    StateVector state(n_sites);
    auto amps = state.amplitudes();
    switch (kind.kind) {
        case InitialState::Kind::AllUpZ:
            amps[0] = 1.0;
            break;
        case InitialState::Kind::AllRightX: {
            const double a = std::pow(2.0, -0.5 * n_sites);
            for (Amplitude& x : amps) x = a;
            break;
        }
        case InitialState::Kind::HaarRandom: {
            // Normalized i.i.d. complex Gaussians are Haar distributed on the unit sphere.
            std::mt19937_64 rng(kind.seed);
            std::normal_distribution<double> gauss(0.0, 1.0);
            for (Amplitude& x : amps) {
                const double re = gauss(rng);
                const double im = gauss(rng);
                x = {re, im};
            }
            const double inv = 1.0 / state.norm();
            for (Amplitude& x : amps) x *= inv;
            break;
        }
    }
    return state;
}

StateVector apply_pauli(StateVector state, SiteObservable obs) {
    require_site(state, obs.site);
    const std::size_t bit = std::size_t{1} << obs.site;
    auto v = state.amplitudes();
    const std::size_t dim = v.size();
    switch (obs.axis) {
        case Axis::Z:
            for (std::size_t s = 0; s < dim; ++s) {
                if (s & bit) v[s] = -v[s];
            }
            break;
        case Axis::X:
            for (std::size_t s = 0; s < dim; ++s) {
                if (!(s & bit)) std::swap(v[s], v[s | bit]);
            }
            break;
        case Axis::Y: {
            // σ_y|0⟩ = i|1⟩, σ_y|1⟩ = -i|0⟩.
            const Amplitude i{0.0, 1.0};
            for (std::size_t s = 0; s < dim; ++s) {
                if (!(s & bit)) {
                    const Amplitude up = v[s];
                    const Amplitude down = v[s | bit];
                    v[s] = -i * down;
                    v[s | bit] = i * up;
                }
            }
            break;
        }
    }
    return state;
}

StateVector apply_diagonal_z_kick(StateVector state, double h_z, double tau) {
    const auto phases = detail::z_phases_by_popcount(state.n_sites(), h_z, tau);
    for (std::size_t s = 0; s < state.dim(); ++s) state[s] *= phases[detail::popcount(s)];
    return state;
}

StateVector apply_x_basis_kick(StateVector state, double j_x, double h_x, double tau) {
    const int n = state.n_sites();
    // The 2^-N normalization of the two unnormalized transforms is folded into the phases.
    const double scale = std::ldexp(1.0, -n);
    const auto phases = detail::x_phases_by_counts(n, j_x, h_x, tau, scale);
    const std::size_t stride = static_cast<std::size_t>(n) + 1;
    auto v = state.amplitudes();
    detail::walsh_hadamard(v);
    for (std::size_t s = 0; s < v.size(); ++s) {
        v[s] *= phases[detail::ring_domain_walls(s, n) * stride + detail::popcount(s)];
    }
    detail::walsh_hadamard(v);
    return state;
}

StateVector hadamard_all(StateVector state) {
    detail::walsh_hadamard(state.amplitudes());
    const double scale = std::pow(2.0, -0.5 * state.n_sites());
    for (Amplitude& x : state.amplitudes()) x *= scale;
    return state;
}

Amplitude inner_product(const StateVector& a, const StateVector& b) {
    if (a.n_sites() != b.n_sites()) {
        throw DimensionError("inner_product: " + std::to_string(a.n_sites()) + " vs " +
                             std::to_string(b.n_sites()) + " sites");
    }
    const Amplitude* x = a.amplitudes().data();
    const Amplitude* y = b.amplitudes().data();
    return detail::pairwise_reduce<Amplitude>(
        0, a.dim(), [x, y](std::size_t s) { return std::conj(x[s]) * y[s]; });
}

StateVector rotate_sites(const StateVector& state, int shift) {
    const int n = state.n_sites();
    shift = ((shift % n) + n) % n;
    StateVector out(n);
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t s = 0; s < state.dim(); ++s) {
        const std::uint64_t t = ((s << shift) | (s >> (n - shift))) & mask;
        out[t] = state[s];
    }
    return out;
}

}  // namespace floq
