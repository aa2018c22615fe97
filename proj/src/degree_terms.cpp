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

#include "bosonsim/degree_terms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "bosonsim/combinatorics.hpp"

namespace bosonsim {

namespace {

// Sum over bijection pairs (sigma, rho): factor_positions -> target_rows of
// the per-position factor
//   sigma(t) == rho(t):  |z(row, col_t)|^2 - 1
//   sigma(t) != rho(t):  z(sigma_row, col_t) * conj(z(rho_row, col_t))
// pair_table caches the d x d factor grid per position so the (d!)^2 loop is
// pure table lookups.
cdouble bijection_pair_sum(
    const ComplexMatrix &zrow,
    std::span<const size_t> cols,
    std::span<const size_t> target_rows,
    std::vector<cdouble> &pair_table) {
    size_t d = cols.size();
    if (d == 0) {
        return 1.0;
    }
    pair_table.resize(d * d * d);
    for (size_t t = 0; t < d; t++) {
        cdouble *slab = pair_table.data() + t * d * d;
        for (size_t a = 0; a < d; a++) {
            cdouble za = zrow(target_rows[a], cols[t]);
            for (size_t b = 0; b < d; b++) {
                if (a == b) {
                    slab[a * d + b] = std::norm(za) - 1.0;
                } else {
                    slab[a * d + b] = za * std::conj(zrow(target_rows[b], cols[t]));
                }
            }
        }
    }

    std::vector<size_t> sigma(d), rho(d);
    std::iota(sigma.begin(), sigma.end(), 0);
    cdouble total = 0.0;
    do {
        std::iota(rho.begin(), rho.end(), 0);
        do {
            cdouble prod = 1.0;
            for (size_t t = 0; t < d; t++) {
                prod *= pair_table[t * d * d + sigma[t] * d + rho[t]];
            }
            total += prod;
        } while (std::next_permutation(rho.begin(), rho.end()));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

}  // namespace

cdouble marginal_degree_term(const ComplexMatrix &zrow, std::span<const size_t> prefix, size_t k) {
    size_t n = zrow.rows();
    size_t j = prefix.size();
    if (k > j || j > n) {
        throw std::invalid_argument("marginal_degree_term: need k <= prefix length <= photon count");
    }
    for (size_t mode : prefix) {
        if (mode >= zrow.cols()) {
            throw std::out_of_range("marginal_degree_term: prefix mode out of range");
        }
    }
    size_t d = j - k;

    // k! bijections between matched position/row sets, times the number of
    // ways to pick the matched rows disjointly from the d target rows.
    double prefactor = static_cast<double>(factorial(static_cast<unsigned>(k))) *
                       static_cast<double>(binomial(static_cast<unsigned>(n - d), static_cast<unsigned>(k)));

    std::vector<cdouble> pair_table;
    std::vector<size_t> cols(d);
    cdouble total = 0.0;
    // positions: which prefix slots carry factors; target_rows: their images.
    for_each_subset(j, d, [&](std::span<const size_t> positions) {
        for (size_t t = 0; t < d; t++) {
            cols[t] = prefix[positions[t]];
        }
        for_each_subset(n, d, [&](std::span<const size_t> target_rows) {
            total += bijection_pair_sum(zrow, cols, target_rows, pair_table);
        });
    });
    return prefactor * total;
}

cdouble squared_permanent_degree_term(const ComplexMatrix &z, size_t k) {
    if (z.rows() != z.cols()) {
        throw std::invalid_argument("squared_permanent_degree_term: matrix must be square");
    }
    std::vector<size_t> prefix(z.rows());
    std::iota(prefix.begin(), prefix.end(), 0);
    return marginal_degree_term(z, prefix, k);
}

}  // namespace bosonsim
