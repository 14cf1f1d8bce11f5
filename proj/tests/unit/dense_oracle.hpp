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

#ifndef FLOQ_TESTS_DENSE_ORACLE_HPP
#define FLOQ_TESTS_DENSE_ORACLE_HPP

#include <Eigen/Dense>
#include <complex>

#include "floq/model_config.hpp"
#include "floq/state_vector.hpp"

// Brute-force 2^N x 2^N matrices built element by element from the bit convention, with
// exponentials taken through Hermitian eigendecomposition. Only usable for N <= 6.
namespace floq::testing {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline Matrix pauli_matrix(int n_sites, int site, Axis axis) {
    const Eigen::Index dim = Eigen::Index{1} << n_sites;
    Matrix m = Matrix::Zero(dim, dim);
    const std::complex<double> i{0.0, 1.0};
    for (Eigen::Index s = 0; s < dim; ++s) {
        const bool down = (s >> site) & 1;
        const Eigen::Index flipped = s ^ (Eigen::Index{1} << site);
        switch (axis) {
            case Axis::X:
                m(flipped, s) = 1.0;
                break;
            case Axis::Y:
                m(flipped, s) = down ? -i : i;
                break;
            case Axis::Z:
                m(s, s) = down ? -1.0 : 1.0;
                break;
        }
    }
    return m;
}

inline Matrix ising_xx(int n_sites) {
    const Eigen::Index dim = Eigen::Index{1} << n_sites;
    Matrix h = Matrix::Zero(dim, dim);
    for (int l = 0; l < n_sites; ++l) {
        h += pauli_matrix(n_sites, l, Axis::X) * pauli_matrix(n_sites, (l + 1) % n_sites, Axis::X);
    }
    return h;
}

inline Matrix uniform_field(int n_sites, Axis axis) {
    const Eigen::Index dim = Eigen::Index{1} << n_sites;
    Matrix h = Matrix::Zero(dim, dim);
    for (int l = 0; l < n_sites; ++l) h += pauli_matrix(n_sites, l, axis);
    return h;
}

/// exp(-i t h) for Hermitian h.
inline Matrix expm_hermitian(const Matrix& h, double t) {
    const Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    const Eigen::VectorXd& w = solver.eigenvalues();
    Vector phases(w.size());
    for (Eigen::Index k = 0; k < w.size(); ++k) phases(k) = std::polar(1.0, -t * w(k));
    return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

/// exp(-iτ(J H_xx + h_x H_x)) exp(-iτ h_z H_z).
inline Matrix floquet_matrix(const ModelConfig& c) {
    const Matrix x_part =
        c.j_x * ising_xx(c.n_sites) + c.effective_h_x() * uniform_field(c.n_sites, Axis::X);
    return expm_hermitian(x_part, c.tau) *
           expm_hermitian(c.h_z * uniform_field(c.n_sites, Axis::Z), c.tau);
}

inline Vector to_eigen(const StateVector& state) {
    Vector v(static_cast<Eigen::Index>(state.dim()));
    for (std::size_t s = 0; s < state.dim(); ++s) v(static_cast<Eigen::Index>(s)) = state[s];
    return v;
}

inline double max_deviation(const StateVector& state, const Vector& v) {
    double worst = 0.0;
    for (std::size_t s = 0; s < state.dim(); ++s) {
        worst = std::max(worst, std::abs(state[s] - v(static_cast<Eigen::Index>(s))));
    }
    return worst;
}

}  // namespace floq::testing

#endif  // FLOQ_TESTS_DENSE_ORACLE_HPP
