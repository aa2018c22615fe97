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

#include "bosonsim/permanent.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace bosonsim {

cdouble permanent_naive(const ComplexMatrix &a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("permanent_naive: matrix must be square");
    }
    size_t n = a.rows();
    if (n > 9) {
        throw std::invalid_argument("permanent_naive: n > 9 would enumerate too many permutations");
    }
    if (n == 0) {
        return 1.0;
    }
    std::vector<size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    cdouble total = 0.0;
    do {
        cdouble term = 1.0;
        for (size_t i = 0; i < n; i++) {
            term *= a(sigma[i], i);
        }
        total += term;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

cdouble permanent_ryser(const ComplexMatrix &a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("permanent_ryser: matrix must be square");
    }
    size_t n = a.rows();
    if (n == 0) {
        return 1.0;
    }
    if (n > 62) {
        throw std::invalid_argument("permanent_ryser: n > 62 exceeds the subset bitmask width");
    }

    // Per(A) = (-1)^n * sum over nonempty column subsets S of
    //          (-1)^|S| * prod_i (sum_{j in S} A(i,j)).
    // Subsets are visited in Gray-code order so each step updates the row
    // sums with a single column.
    std::vector<cdouble> row_sum(n, 0.0);
    cdouble total = 0.0;
    uint64_t prev_gray = 0;
    uint64_t end = uint64_t{1} << n;
    for (uint64_t t = 1; t < end; t++) {
        uint64_t gray = t ^ (t >> 1);
        uint64_t changed = gray ^ prev_gray;
        size_t j = std::countr_zero(changed);
        if (gray & changed) {
            for (size_t i = 0; i < n; i++) {
                row_sum[i] += a(i, j);
            }
        } else {
            for (size_t i = 0; i < n; i++) {
                row_sum[i] -= a(i, j);
            }
        }
        cdouble prod = 1.0;
        for (size_t i = 0; i < n; i++) {
            prod *= row_sum[i];
        }
        if (std::popcount(gray) & 1) {
            total -= prod;
        } else {
            total += prod;
        }
        prev_gray = gray;
    }
    return (n & 1) ? -total : total;
}

}  // namespace bosonsim
