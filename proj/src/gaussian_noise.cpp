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

#include "bosonsim/gaussian_noise.hpp"

#include <cmath>
#include <stdexcept>

#include "bosonsim/combinatorics.hpp"
#include "bosonsim/degree_terms.hpp"
#include "bosonsim/permanent.hpp"

namespace bosonsim {

GaussianNoiseSpec GaussianNoiseSpec::direct(double x) {
    if (x < 0.0 || x > 1.0) {
        throw std::invalid_argument("GaussianNoiseSpec: x must lie in [0, 1]");
    }
    return GaussianNoiseSpec{x, 1};
}

GaussianNoiseSpec GaussianNoiseSpec::scaled(double x1, unsigned gamma) {
    if (x1 < 0.0 || x1 >= 1.0) {
        throw std::invalid_argument("GaussianNoiseSpec: x1 must lie in [0, 1)");
    }
    if (gamma == 0) {
        throw std::invalid_argument("GaussianNoiseSpec: gamma must be positive");
    }
    return GaussianNoiseSpec{x1, gamma};
}

double GaussianNoiseSpec::effective_x() const {
    return std::pow(x1, static_cast<double>(gamma));
}

CutoffPolicy CutoffPolicy::fixed(size_t l, size_t n_photons) {
    if (l > n_photons) {
        throw std::invalid_argument("CutoffPolicy: cutoff cannot exceed the photon count");
    }
    return CutoffPolicy{l};
}

CutoffPolicy CutoffPolicy::from_error_budget(size_t n_photons, double x, double eps, double delta) {
    return CutoffPolicy{select_cutoff(n_photons, x, eps, delta)};
}

namespace {

void check_outcome(const UnitaryMatrix &u, const OutcomeOrdered &z) {
    if (z.z.empty() || z.z.size() > u.dim()) {
        throw std::invalid_argument("outcome length must be in [1, M]");
    }
    if (z.z.back() >= u.dim()) {
        throw std::out_of_range("outcome mode index exceeds the mode count");
    }
}

ComplexMatrix outcome_block(const UnitaryMatrix &u, const OutcomeOrdered &z) {
    size_t n = z.z.size();
    std::vector<size_t> rows(n);
    for (size_t i = 0; i < n; i++) {
        rows[i] = i;
    }
    return submatrix(u.matrix, rows, z.z);
}

}  // namespace

double exact_prob(const UnitaryMatrix &u, const OutcomeOrdered &z) {
    check_outcome(u, z);
    if (!is_collision_free(z)) {
        throw std::invalid_argument("exact_prob: collision outcome; use exact_prob_general");
    }
    return std::norm(permanent_ryser(outcome_block(u, z)));
}

double exact_prob_general(const UnitaryMatrix &u, const OutcomeOrdered &z) {
    check_outcome(u, z);
    return std::norm(permanent_ryser(outcome_block(u, z))) / occupation_multiplicity(z);
}

double noisy_prob_analytic(const UnitaryMatrix &u, const OutcomeOrdered &z, double x) {
    check_outcome(u, z);
    if (!is_collision_free(z)) {
        throw std::invalid_argument("noisy_prob_analytic: collision outcome not supported");
    }
    if (x < 0.0 || x > 1.0) {
        throw std::invalid_argument("noisy_prob_analytic: x must lie in [0, 1]");
    }
    size_t n = z.z.size();
    double m = static_cast<double>(u.dim());

    double total = 0.0;
    std::vector<size_t> out_cols(n);
    for (size_t k = 0; k <= n; k++) {
        // x^k (1-x)^{ N-k } can underflow harmlessly; skip exact zeros so the
        // x=0 and x=1 endpoints stay exact.
        double weight = std::pow(x, static_cast<double>(k)) * std::pow(1.0 - x, static_cast<double>(n - k)) /
                        std::pow(m, static_cast<double>(n - k)) * static_cast<double>(factorial(n - k));
        if (weight == 0.0) {
            continue;
        }
        double perm_sum = 0.0;
        for_each_subset(n, k, [&](std::span<const size_t> in_rows) {
            for_each_subset(n, k, [&](std::span<const size_t> out_pick) {
                for (size_t t = 0; t < k; t++) {
                    out_cols[t] = z.z[out_pick[t]];
                }
                ComplexMatrix block = submatrix(u.matrix, in_rows, std::span<const size_t>(out_cols.data(), k));
                perm_sum += std::norm(permanent_ryser(block));
            });
        });
        total += weight * perm_sum;
    }
    return total;
}

double noisy_prob_decomposition(const UnitaryMatrix &u, const OutcomeOrdered &z, double x) {
    check_outcome(u, z);
    if (x < 0.0 || x > 1.0) {
        throw std::invalid_argument("noisy_prob_decomposition: x must lie in [0, 1]");
    }
    size_t n = z.z.size();
    double m = static_cast<double>(u.dim());
    ComplexMatrix block = outcome_block(u, z);
    double scale = std::sqrt(m);
    for (auto &e : block.entries()) {
        e *= scale;
    }
    double total = 0.0;
    for (size_t k = 0; k <= n; k++) {
        double weight = std::pow(x, static_cast<double>(n - k));
        if (weight == 0.0) {
            continue;
        }
        total += weight * squared_permanent_degree_term(block, k).real();
    }
    return total / std::pow(m, static_cast<double>(n));
}

McEstimate noisy_prob_mc(const UnitaryMatrix &u, const OutcomeOrdered &z, double x, size_t samples, RngStream &rng) {
    check_outcome(u, z);
    if (samples < 2) {
        throw std::invalid_argument("noisy_prob_mc: need at least 2 samples");
    }
    if (x < 0.0 || x > 1.0) {
        throw std::invalid_argument("noisy_prob_mc: x must lie in [0, 1]");
    }
    size_t n = z.z.size();
    double m = static_cast<double>(u.dim());
    ComplexMatrix base = outcome_block(u, z);
    double sx = std::sqrt(x);
    // Only the N x N block of the noise matrix that meets the permanent is
    // ever drawn; its entries have variance 1/M.
    double sy = std::sqrt((1.0 - x) / m);

    double sum = 0.0;
    double sum_sq = 0.0;
    ComplexMatrix w(n, n);
    for (size_t s = 0; s < samples; s++) {
        for (size_t i = 0; i < n * n; i++) {
            w.entries()[i] = sx * base.entries()[i] + sy * rng.complex_gaussian();
        }
        double value = std::norm(permanent_ryser(w));
        sum += value;
        sum_sq += value * value;
    }
    double mean = sum / static_cast<double>(samples);
    double variance = (sum_sq - sum * mean) / static_cast<double>(samples - 1);
    variance = std::max(variance, 0.0);
    return McEstimate{mean, std::sqrt(variance / static_cast<double>(samples)), samples};
}

size_t select_cutoff(size_t n_photons, double x, double eps, double delta) {
    if (eps <= 0.0 || eps >= 1.0 || delta <= 0.0 || delta >= 1.0) {
        throw std::invalid_argument("select_cutoff: eps and delta must lie in (0, 1)");
    }
    if (x < 0.0 || x > 1.0) {
        throw std::invalid_argument("select_cutoff: x must lie in [0, 1]");
    }
    if (x == 0.0) {
        return 0;
    }
    if (x == 1.0) {
        return n_photons;
    }
    double threshold = std::log(2.0 * std::sqrt(static_cast<double>(n_photons)) / (eps * std::sqrt(delta))) /
                           std::log(1.0 / x) -
                       1.0;
    double l = std::ceil(threshold);
    if (l < 0.0) {
        return 0;
    }
    if (l >= static_cast<double>(n_photons)) {
        return n_photons;
    }
    return static_cast<size_t>(l);
}

double tvd_bound(size_t n_photons, double x, size_t l, double delta) {
    if (delta <= 0.0 || delta > 1.0) {
        throw std::invalid_argument("tvd_bound: delta must lie in (0, 1]");
    }
    return 2.0 * std::sqrt(static_cast<double>(n_photons)) * std::pow(x, static_cast<double>(l + 1)) /
           std::sqrt(delta);
}

}  // namespace bosonsim
