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

#include "bosonsim/marginal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bosonsim/degree_terms.hpp"

namespace bosonsim {

namespace {

bool has_repeat(std::span<const size_t> prefix) {
    std::vector<size_t> sorted(prefix.begin(), prefix.end());
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

void check_query(const RescaledInputMatrix &z, std::span<const size_t> prefix, double x, size_t l) {
    if (prefix.size() > z.n_photons) {
        throw std::invalid_argument("truncated_marginal: prefix longer than the photon count");
    }
    for (size_t mode : prefix) {
        if (mode >= z.n_modes) {
            throw std::out_of_range("truncated_marginal: prefix mode out of range");
        }
    }
    if (x < 0.0 || x > 1.0) {
        throw std::invalid_argument("truncated_marginal: x must lie in [0, 1]");
    }
    if (l > z.n_photons) {
        throw std::invalid_argument("truncated_marginal: cutoff exceeds the photon count");
    }
}

double evaluate_marginal(const RescaledInputMatrix &z, std::span<const size_t> prefix, double x, size_t l) {
    size_t n = z.n_photons;
    size_t j = prefix.size();
    size_t k_low = j > l ? j - l : 0;

    double sum = 0.0;
    for (size_t k = j + 1; k-- > k_low;) {
        double weight = std::pow(x, static_cast<double>(j - k));
        if (weight == 0.0) {
            continue;
        }
        sum += weight * marginal_degree_term(z.z, prefix, k).real();
    }
    // (N-j)!/N! = 1 / (N (N-1) ... (N-j+1))
    double scale = 1.0;
    for (size_t i = 0; i < j; i++) {
        scale /= static_cast<double>(n - i) * static_cast<double>(z.n_modes);
    }
    return scale * sum;
}

}  // namespace

QuasiValue truncated_marginal(const RescaledInputMatrix &z, std::span<const size_t> prefix, double x, size_t l) {
    check_query(z, prefix, x, l);
    if (has_repeat(prefix)) {
        throw std::invalid_argument("truncated_marginal: prefix holds a repeated mode; use collision_oracle");
    }
    return QuasiValue{evaluate_marginal(z, prefix, x, l)};
}

QuasiValue truncated_marginal(const RescaledInputMatrix &z, const MarginalQuery &query) {
    return truncated_marginal(z, query.prefix, query.x, query.degree_cutoff);
}

QuasiValue truncated_marginal_raw(const RescaledInputMatrix &z, std::span<const size_t> prefix, double x, size_t l) {
    check_query(z, prefix, x, l);
    return QuasiValue{evaluate_marginal(z, prefix, x, l)};
}

QuasiValue collision_oracle(const RescaledInputMatrix &z, std::span<const size_t> prefix, double x, size_t l) {
    check_query(z, prefix, x, l);
    if (l < 1) {
        throw std::invalid_argument("collision_oracle: unsupported configuration, the cutoff must be at least 1");
    }
    size_t j = prefix.size();
    if (j < 2) {
        throw std::invalid_argument("collision_oracle: a collision needs at least two entries");
    }

    // Locate the repeated mode and strip one occurrence.
    std::vector<size_t> base;
    base.reserve(j - 1);
    bool repeat_seen = false;
    for (size_t mode : prefix) {
        bool duplicate = std::find(base.begin(), base.end(), mode) != base.end();
        if (duplicate) {
            if (repeat_seen) {
                throw std::invalid_argument("collision_oracle: more than one repeated entry is undefined");
            }
            repeat_seen = true;
        } else {
            base.push_back(mode);
        }
    }
    if (!repeat_seen) {
        throw std::invalid_argument("collision_oracle: prefix is collision-free");
    }

    double base_value = evaluate_marginal(z, base, x, l);
    double fresh_sum = 0.0;
    std::vector<size_t> extended(base);
    extended.push_back(0);
    for (size_t mode = 0; mode < z.n_modes; mode++) {
        if (std::find(base.begin(), base.end(), mode) != base.end()) {
            continue;
        }
        extended.back() = mode;
        fresh_sum += evaluate_marginal(z, extended, x, l);
    }
    return QuasiValue{(base_value - fresh_sum) / static_cast<double>(j - 1)};
}

}  // namespace bosonsim
