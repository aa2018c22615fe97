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

#pragma once

#include "bosonsim/complex_matrix.hpp"
#include "bosonsim/rng.hpp"

namespace bosonsim {

/// An M x M circuit unitary. Construction validates unitarity to 1e-9
/// per entry of U·U† − I.
struct UnitaryMatrix {
    ComplexMatrix matrix;

    explicit UnitaryMatrix(ComplexMatrix m);

    size_t dim() const {
        return matrix.rows();
    }
};

/// The top-N-rows block of a unitary rescaled by sqrt(M): z(i, r) = sqrt(M)·U(i, r).
///
/// Rows are exactly orthogonal with squared norm M (up to float error); the
/// marginal evaluators rely on those column-sum identities, which is why they
/// always consume this type rather than a Gaussian stand-in.
struct RescaledInputMatrix {
    size_t n_photons;
    size_t n_modes;
    ComplexMatrix z;

    static RescaledInputMatrix from_unitary(const UnitaryMatrix &u, size_t n_photons);
};

/// Matrix of iid complex Gaussians: E[z] = 0, E[|z|^2] = variance,
/// real/imag parts each carrying variance/2.
ComplexMatrix ginibre(size_t rows, size_t cols, double variance, RngStream &rng);

/// Haar-random M x M unitary: QR of a complex Ginibre matrix, with the
/// Gram-Schmidt construction whose triangular factor has a real positive
/// diagonal (that phase convention is what makes the factor Haar).
UnitaryMatrix haar_unitary(size_t m, RngStream &rng);

}  // namespace bosonsim
