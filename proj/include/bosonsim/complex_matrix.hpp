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

#include <complex>
#include <span>
#include <vector>

namespace bosonsim {

using cdouble = std::complex<double>;

/// Dense complex matrix, row-major storage.
class ComplexMatrix {
   public:
    ComplexMatrix() : rows_(0), cols_(0) {}
    ComplexMatrix(size_t rows, size_t cols);
    ComplexMatrix(size_t rows, size_t cols, std::vector<cdouble> entries);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }

    cdouble &operator()(size_t r, size_t c) {
        return entries_[r * cols_ + c];
    }
    const cdouble &operator()(size_t r, size_t c) const {
        return entries_[r * cols_ + c];
    }

    std::span<const cdouble> entries() const {
        return entries_;
    }
    std::span<cdouble> entries() {
        return entries_;
    }

    /// True when every entry is finite (no NaN/Inf).
    bool is_finite() const;

    bool operator==(const ComplexMatrix &other) const = default;

    static ComplexMatrix identity(size_t dim);

   private:
    size_t rows_;
    size_t cols_;
    std::vector<cdouble> entries_;
};

/// Entry (i, j) of the result is a(row_idx[i], col_idx[j]).
/// Duplicate column indices are allowed; collision outcomes repeat columns.
ComplexMatrix submatrix(const ComplexMatrix &a, std::span<const size_t> row_idx, std::span<const size_t> col_idx);

/// Max-norm of a·a† − identity; used by the unitarity checks.
double unitarity_defect(const ComplexMatrix &a);

}  // namespace bosonsim
