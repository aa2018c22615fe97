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

#include "bosonsim/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace bosonsim {

ComplexMatrix::ComplexMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
}

ComplexMatrix::ComplexMatrix(size_t rows, size_t cols, std::vector<cdouble> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) {
        throw std::invalid_argument("ComplexMatrix: entry count does not match rows*cols");
    }
}

bool ComplexMatrix::is_finite() const {
    for (const auto &e : entries_) {
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
            return false;
        }
    }
    return true;
}

ComplexMatrix ComplexMatrix::identity(size_t dim) {
    ComplexMatrix m(dim, dim);
    for (size_t i = 0; i < dim; i++) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix submatrix(const ComplexMatrix &a, std::span<const size_t> row_idx, std::span<const size_t> col_idx) {
    for (size_t r : row_idx) {
        if (r >= a.rows()) {
            throw std::out_of_range("submatrix: row index out of range");
        }
    }
    for (size_t c : col_idx) {
        if (c >= a.cols()) {
            throw std::out_of_range("submatrix: column index out of range");
        }
    }
    ComplexMatrix out(row_idx.size(), col_idx.size());
    for (size_t i = 0; i < row_idx.size(); i++) {
        for (size_t j = 0; j < col_idx.size(); j++) {
            out(i, j) = a(row_idx[i], col_idx[j]);
        }
    }
    return out;
}

double unitarity_defect(const ComplexMatrix &a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("unitarity_defect: matrix must be square");
    }
    size_t n = a.rows();
    double worst = 0.0;
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            cdouble dot = 0.0;
            for (size_t k = 0; k < n; k++) {
                dot += a(i, k) * std::conj(a(j, k));
            }
            if (i == j) {
                dot -= 1.0;
            }
            worst = std::max(worst, std::abs(dot));
        }
    }
    return worst;
}

}  // namespace bosonsim
