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

#include "bosonsim/distinguishability.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "bosonsim/combinatorics.hpp"

namespace bosonsim {

DistinguishabilitySpec::DistinguishabilitySpec(double x_in) : x(x_in) {
    if (x < 0.0 || x > 1.0) {
        throw std::invalid_argument("DistinguishabilitySpec: x must lie in [0, 1]");
    }
}

double dist_prob_exact(const UnitaryMatrix &u, const OutcomeOrdered &z, double x) {
    size_t n = z.z.size();
    if (n == 0 || n > 7) {
        throw std::invalid_argument("dist_prob_exact: photon count must lie in [1, 7]");
    }
    if (z.z.back() >= u.dim()) {
        throw std::out_of_range("dist_prob_exact: outcome mode out of range");
    }
    if (x < 0.0 || x > 1.0) {
        throw std::invalid_argument("dist_prob_exact: x must lie in [0, 1]");
    }

    std::vector<size_t> sigma(n), rho(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    cdouble total = 0.0;
    do {
        std::iota(rho.begin(), rho.end(), 0);
        do {
            size_t agreements = 0;
            cdouble term = 1.0;
            for (size_t i = 0; i < n; i++) {
                if (sigma[i] == rho[i]) {
                    agreements++;
                }
                term *= u.matrix(sigma[i], z.z[i]) * std::conj(u.matrix(rho[i], z.z[i]));
            }
            total += std::pow(x, static_cast<double>(n - agreements)) * term;
        } while (std::next_permutation(rho.begin(), rho.end()));
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    if (std::abs(total.imag()) > 1e-12 * std::max(1.0, std::abs(total.real()))) {
        throw std::runtime_error("dist_prob_exact: result failed the realness check");
    }
    return total.real();
}

cdouble dist_degree_term(const ComplexMatrix &z, size_t k) {
    if (z.rows() != z.cols()) {
        throw std::invalid_argument("dist_degree_term: matrix must be square");
    }
    size_t n = z.rows();
    if (n > 7) {
        throw std::invalid_argument("dist_degree_term: photon count must not exceed 7");
    }
    if (k > n) {
        throw std::invalid_argument("dist_degree_term: k out of range");
    }
    size_t d = n - k;

    cdouble total = 0.0;
    std::vector<size_t> comp_t(d), comp_tp(d);
    for_each_subset(n, k, [&](std::span<const size_t> t_set) {
        // complement of T: the mismatched positions
        {
            size_t w = 0;
            for (size_t i = 0; i < n; i++) {
                if (!std::binary_search(t_set.begin(), t_set.end(), i)) {
                    comp_t[w++] = i;
                }
            }
        }
        for_each_subset(n, k, [&](std::span<const size_t> tp_set) {
            size_t w = 0;
            for (size_t i = 0; i < n; i++) {
                if (!std::binary_search(tp_set.begin(), tp_set.end(), i)) {
                    comp_tp[w++] = i;
                }
            }
            // sigma: matched positions T -> matched rows T'
            std::vector<size_t> sigma_rows(tp_set.begin(), tp_set.end());
            do {
                cdouble matched = 1.0;
                for (size_t t = 0; t < k; t++) {
                    matched *= std::norm(z(sigma_rows[t], t_set[t]));
                }
                // sigma', rho': mismatched positions -> mismatched rows, with
                // no positionwise agreement allowed.
                std::vector<size_t> sp(comp_tp), rp(comp_tp);
                std::sort(sp.begin(), sp.end());
                do {
                    std::sort(rp.begin(), rp.end());
                    do {
                        cdouble term = matched;
                        bool agrees = false;
                        for (size_t t = 0; t < d; t++) {
                            if (sp[t] == rp[t]) {
                                agrees = true;
                                break;
                            }
                            term *= z(sp[t], comp_t[t]) * std::conj(z(rp[t], comp_t[t]));
                        }
                        if (!agrees) {
                            total += term;
                        }
                    } while (std::next_permutation(rp.begin(), rp.end()));
                } while (std::next_permutation(sp.begin(), sp.end()));
            } while (std::next_permutation(sigma_rows.begin(), sigma_rows.end()));
        });
    });
    return total;
}

double dist_norm_formula(size_t n, size_t k) {
    if (k > n) {
        throw std::invalid_argument("dist_norm_formula: k out of range");
    }
    uint64_t inner = 0;
    for (size_t j = 0; j <= k; j++) {
        uint64_t c = binomial(k, j);
        inner += c * c * factorial(j) * factorial(k - j) * derangements(k - j) * (uint64_t{1} << j);
    }
    uint64_t c = binomial(n, k);
    return static_cast<double>(c * c * factorial(n - k) * derangements(n - k)) * static_cast<double>(inner);
}

size_t dist_cutoff(size_t n_photons, double x, double eps, double delta) {
    if (eps <= 0.0 || eps >= 1.0 || delta <= 0.0 || delta >= 1.0) {
        throw std::invalid_argument("dist_cutoff: eps and delta must lie in (0, 1)");
    }
    if (x < 0.0 || x > 1.0) {
        throw std::invalid_argument("dist_cutoff: x must lie in [0, 1]");
    }
    if (x == 0.0) {
        return 0;
    }
    if (x == 1.0) {
        return n_photons;
    }
    double threshold =
        std::log(2.0 * M_E * std::sqrt(static_cast<double>(n_photons)) / (eps * std::sqrt(delta))) /
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

OutcomeUnordered distinguishable_sampler(const UnitaryMatrix &u, size_t n_photons, RngStream &rng) {
    if (n_photons > u.dim()) {
        throw std::invalid_argument("distinguishable_sampler: more photons than modes");
    }
    size_t m = u.dim();
    OutcomeUnordered out;
    out.r.reserve(n_photons);
    for (size_t photon = 0; photon < n_photons; photon++) {
        double unit = rng.uniform();
        double cumulative = 0.0;
        size_t chosen = m - 1;
        for (size_t mode = 0; mode < m; mode++) {
            cumulative += std::norm(u.matrix(photon, mode));
            if (unit < cumulative) {
                chosen = mode;
                break;
            }
        }
        out.r.push_back(chosen);
    }
    return out;
}

uint64_t dist_summand_count(size_t n, size_t k) {
    if (k > n) {
        throw std::invalid_argument("dist_summand_count: k out of range");
    }
    uint64_t c = binomial(n, k);
    return c * c * factorial(k) * factorial(n - k) * derangements(n - k);
}

DistBarrierReport dist_barrier_report(size_t n) {
    DistBarrierReport report;
    report.n = n;
    report.n_factorial = factorial(n);
    report.all_at_least_n_factorial = true;
    for (size_t k = 0; k <= n; k++) {
        uint64_t count = dist_summand_count(n, k);
        report.summand_counts.push_back(count);
        if (count < report.n_factorial) {
            report.all_at_least_n_factorial = false;
        }
    }
    return report;
}

}  // namespace bosonsim
