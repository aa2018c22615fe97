// Copyright 2026 The bosonsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bosonsim/random_matrices.hpp"

#include <cmath>
#include <stdexcept>

namespace bosonsim {

UnitaryMatrix::UnitaryMatrix(ComplexMatrix m) : matrix(std::move(m)) {
    if (matrix.rows() != matrix.cols() || matrix.rows() == 0) {
        throw std::invalid_argument("UnitaryMatrix: matrix must be square and non-empty");
    }
    if (unitarity_defect(matrix) > 1e-9) {
        throw std::invalid_argument("UnitaryMatrix: U·U† deviates from identity by more than 1e-9");
    }
}

RescaledInputMatrix RescaledInputMatrix::from_unitary(const UnitaryMatrix &u, size_t n_photons) {
    size_t m = u.dim();
    if (n_photons == 0 || n_photons > m) {
        throw std::invalid_argument("RescaledInputMatrix: need 1 <= N <= M");
    }
    double scale = std::sqrt(static_cast<double>(m));
    ComplexMatrix z(n_photons, m);
    for (size_t i = 0; i < n_photons; i++) {
        for (size_t r = 0; r < m; r++) {
            z(i, r) = scale * u.matrix(i, r);
        }
    }
    return RescaledInputMatrix{n_photons, m, std::move(z)};
}

ComplexMatrix ginibre(size_t rows, size_t cols, double variance, RngStream &rng) {
    if (variance <= 0.0) {
        throw std::invalid_argument("ginibre: variance must be positive");
    }
    double scale = std::sqrt(variance);
    ComplexMatrix out(rows, cols);
    for (auto &e : out.entries()) {
        e = scale * rng.complex_gaussian();
    }
    return out;
}

UnitaryMatrix haar_unitary(size_t m, RngStream &rng) {
    if (m == 0) {
        throw std::invalid_argument("haar_unitary: dimension must be at least 1");
    }
    ComplexMatrix a = ginibre(m, m, 1.0, rng);

    // Modified Gram-Schmidt on the columns, run twice for orthogonality at
    // the 1e-9 tolerance even at larger M. Positive norms make the implicit
    // R diagonal real positive, which fixes the Haar phase convention.
    auto orthogonalize = [m](ComplexMatrix &q) {
        for (size_t j = 0; j < m; j++) {
            for (size_t i = 0; i < j; i++) {
                cdouble dot = 0.0;
                for (size_t k = 0; k < m; k++) {
                    dot += std::conj(q(k, i)) * q(k, j);
                }
                for (size_t k = 0; k < m; k++) {
                    q(k, j) -= dot * q(k, i);
                }
            }
            double norm = 0.0;
            for (size_t k = 0; k < m; k++) {
                norm += std::norm(q(k, j));
            }
            norm = std::sqrt(norm);
            if (norm == 0.0) {
                throw std::runtime_error("haar_unitary: degenerate Ginibre draw");
            }
            for (size_t k = 0; k < m; k++) {
                q(k, j) /= norm;
            }
        }
    };
    orthogonalize(a);
    orthogonalize(a);
    return UnitaryMatrix(std::move(a));
}

}  // namespace bosonsim
