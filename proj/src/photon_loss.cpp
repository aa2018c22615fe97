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

#include "bosonsim/photon_loss.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bosonsim/combinatorics.hpp"
#include "bosonsim/permanent.hpp"

namespace bosonsim {

LossSpec LossSpec::direct(double eta) {
    if (eta < 0.0 || eta > 1.0) {
        throw std::invalid_argument("LossSpec: eta must lie in [0, 1]");
    }
    return LossSpec{eta};
}

LossSpec LossSpec::per_depth(double eta1, unsigned depth) {
    if (eta1 <= 0.0 || eta1 > 1.0) {
        throw std::invalid_argument("LossSpec: eta1 must lie in (0, 1]");
    }
    return LossSpec{std::pow(eta1, static_cast<double>(depth))};
}

namespace {

void check_loss_args(const UnitaryMatrix &u, size_t clicks, double eta, size_t n_photons) {
    if (n_photons == 0 || n_photons > u.dim()) {
        throw std::invalid_argument("photon loss: need 1 <= N <= M");
    }
    if (clicks > n_photons) {
        throw std::invalid_argument("photon loss: more clicks than input photons");
    }
    if (eta < 0.0 || eta > 1.0) {
        throw std::invalid_argument("photon loss: eta must lie in [0, 1]");
    }
}

/// sum over k-subsets T of the first n_photons input rows of
/// |Per(U_{T, cols})|^2.
double survivor_permanent_sum(const UnitaryMatrix &u, std::span<const size_t> cols, size_t n_photons) {
    double total = 0.0;
    for_each_subset(n_photons, cols.size(), [&](std::span<const size_t> rows) {
        total += std::norm(permanent_ryser(submatrix(u.matrix, rows, cols)));
    });
    return total;
}

double exact_sector_prefactor(double eta, size_t k, size_t lost) {
    return std::pow(eta, static_cast<double>(k)) * std::pow(1.0 - eta, static_cast<double>(lost));
}

double truncated_sector_prefactor(double eta, size_t k, size_t lost, size_t l) {
    if (k > l) {
        return 0.0;
    }
    double alternating = 0.0;
    for (size_t j = 0; j + k <= l && j <= lost; j++) {
        double term = static_cast<double>(binomial(static_cast<unsigned>(lost), static_cast<unsigned>(j))) *
                      std::pow(-eta, static_cast<double>(j));
        alternating += term;
    }
    return std::pow(eta, static_cast<double>(k)) * alternating;
}

}  // namespace

double lossy_prob(const UnitaryMatrix &u, std::span<const size_t> clicks, double eta, size_t n_photons) {
    check_loss_args(u, clicks.size(), eta, n_photons);
    std::vector<size_t> sorted(clicks.begin(), clicks.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("lossy_prob: repeated modes are unsupported here");
    }
    size_t k = clicks.size();
    double prefactor = exact_sector_prefactor(eta, k, n_photons - k) / static_cast<double>(factorial(k));
    if (prefactor == 0.0) {
        return 0.0;
    }
    return prefactor * survivor_permanent_sum(u, clicks, n_photons);
}

double lossy_outcome_prob(const UnitaryMatrix &u, const OutcomeOrdered &z, double eta, size_t n_photons) {
    check_loss_args(u, z.z.size(), eta, n_photons);
    size_t k = z.z.size();
    double prefactor = exact_sector_prefactor(eta, k, n_photons - k) / occupation_multiplicity(z);
    if (prefactor == 0.0) {
        return 0.0;
    }
    return prefactor * survivor_permanent_sum(u, z.z, n_photons);
}

double lossy_truncated(const UnitaryMatrix &u, std::span<const size_t> clicks, double eta, size_t l, size_t n_photons) {
    check_loss_args(u, clicks.size(), eta, n_photons);
    size_t k = clicks.size();
    double prefactor = truncated_sector_prefactor(eta, k, n_photons - k, l) / static_cast<double>(factorial(k));
    if (prefactor == 0.0) {
        return 0.0;
    }
    return prefactor * survivor_permanent_sum(u, clicks, n_photons);
}

double lossy_truncated_outcome_prob(
    const UnitaryMatrix &u, const OutcomeOrdered &z, double eta, size_t l, size_t n_photons) {
    check_loss_args(u, z.z.size(), eta, n_photons);
    size_t k = z.z.size();
    double prefactor = truncated_sector_prefactor(eta, k, n_photons - k, l) / occupation_multiplicity(z);
    if (prefactor == 0.0) {
        return 0.0;
    }
    return prefactor * survivor_permanent_sum(u, z.z, n_photons);
}

double binomial_tail_mass(size_t n_photons, double eta, size_t l) {
    if (eta < 0.0 || eta > 1.0) {
        throw std::invalid_argument("binomial_tail_mass: eta must lie in [0, 1]");
    }
    double mass = 0.0;
    for (size_t k = l + 1; k <= n_photons; k++) {
        mass += static_cast<double>(binomial(static_cast<unsigned>(n_photons), static_cast<unsigned>(k))) *
                std::pow(eta, static_cast<double>(k)) * std::pow(1.0 - eta, static_cast<double>(n_photons - k));
    }
    return mass;
}

LossBarrierReport loss_barrier_report(size_t n_photons, double eta, size_t l, double target_mass) {
    if (target_mass < 0.0 || target_mass > 1.0) {
        throw std::invalid_argument("loss_barrier_report: target mass must lie in [0, 1]");
    }
    LossBarrierReport report;
    report.n = n_photons;
    report.eta = eta;
    report.l = l;
    report.target_mass = target_mass;
    report.discarded_mass = binomial_tail_mass(n_photons, eta, l);
    report.required_l = n_photons;
    for (size_t candidate = 0; candidate <= n_photons; candidate++) {
        if (binomial_tail_mass(n_photons, eta, candidate) <= target_mass) {
            report.required_l = candidate;
            break;
        }
    }
    // Click-number mean and spread from the sector weights themselves; they
    // must land on eta·N and sqrt(N·eta·(1-eta)).
    double mean = 0.0;
    double second = 0.0;
    for (size_t k = 0; k <= n_photons; k++) {
        double w = static_cast<double>(binomial(static_cast<unsigned>(n_photons), static_cast<unsigned>(k))) *
                   std::pow(eta, static_cast<double>(k)) * std::pow(1.0 - eta, static_cast<double>(n_photons - k));
        mean += static_cast<double>(k) * w;
        second += static_cast<double>(k) * static_cast<double>(k) * w;
    }
    report.mean_clicks = mean;
    report.stddev_clicks = std::sqrt(std::max(0.0, second - mean * mean));
    return report;
}

}  // namespace bosonsim
