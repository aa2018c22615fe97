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

#include "bosonsim/validation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "bosonsim/combinatorics.hpp"
#include "bosonsim/degree_terms.hpp"
#include "bosonsim/distinguishability.hpp"
#include "bosonsim/marginal.hpp"
#include "bosonsim/parallel.hpp"
#include "bosonsim/permanent.hpp"

namespace bosonsim {

OutcomeKey OutcomeKey::of(std::vector<size_t> z) {
    if (!std::is_sorted(z.begin(), z.end())) {
        throw std::invalid_argument("OutcomeKey: modes must be sorted");
    }
    return OutcomeKey{std::move(z), false};
}

OutcomeKey OutcomeKey::c() {
    return OutcomeKey{{}, true};
}

std::string OutcomeKey::str() const {
    if (collision) {
        return "c";
    }
    std::ostringstream out;
    for (size_t i = 0; i < modes.size(); i++) {
        if (i) {
            out << ' ';
        }
        out << modes[i];
    }
    return out.str();
}

double tvd(const Distribution &p, const Distribution &q) {
    for (const auto &[key, value] : p) {
        if (value < 0.0) {
            throw std::invalid_argument("tvd: first distribution carries a negative probability");
        }
    }
    double total = 0.0;
    for (const auto &[key, pv] : p) {
        auto it = q.find(key);
        total += std::abs(pv - (it == q.end() ? 0.0 : it->second));
    }
    for (const auto &[key, qv] : q) {
        if (!p.contains(key)) {
            total += std::abs(qv);
        }
    }
    return total;
}

Distribution enumerate_qbar(const UnitaryMatrix &u, size_t n_photons, double x, size_t l) {
    RescaledInputMatrix z = RescaledInputMatrix::from_unitary(u, n_photons);
    double n_fact = static_cast<double>(factorial(static_cast<unsigned>(n_photons)));
    Distribution dist;
    double cf_total = 0.0;
    for_each_subset(u.dim(), n_photons, [&](std::span<const size_t> modes) {
        double value = n_fact * truncated_marginal(z, modes, x, l).value;
        dist[OutcomeKey::of(std::vector<size_t>(modes.begin(), modes.end()))] = value;
        cf_total += value;
    });
    dist[OutcomeKey::c()] = 1.0 - cf_total;
    return dist;
}

Distribution enumerate_noisy(const UnitaryMatrix &u, size_t n_photons, double x) {
    Distribution dist;
    double cf_total = 0.0;
    for_each_subset(u.dim(), n_photons, [&](std::span<const size_t> modes) {
        double value = noisy_prob_analytic(u, OutcomeOrdered(std::vector<size_t>(modes.begin(), modes.end())), x);
        dist[OutcomeKey::of(std::vector<size_t>(modes.begin(), modes.end()))] = value;
        cf_total += value;
    });
    dist[OutcomeKey::c()] = 1.0 - cf_total;
    return dist;
}

namespace {

/// Visits every nondecreasing length-n mode list over m modes
/// (combinations with repetition).
void for_each_multiset(size_t m, size_t n, const std::function<void(std::span<const size_t>)> &fn) {
    std::vector<size_t> z(n, 0);
    if (n == 0) {
        fn(z);
        return;
    }
    while (true) {
        fn(z);
        size_t i = n;
        while (i > 0) {
            i--;
            if (z[i] + 1 < m) {
                size_t next = z[i] + 1;
                for (size_t j = i; j < n; j++) {
                    z[j] = next;
                }
                break;
            }
            if (i == 0) {
                return;
            }
        }
    }
}

}  // namespace

Distribution enumerate_exact(const UnitaryMatrix &u, size_t n_photons) {
    Distribution dist;
    for_each_multiset(u.dim(), n_photons, [&](std::span<const size_t> modes) {
        OutcomeOrdered z(std::vector<size_t>(modes.begin(), modes.end()));
        double value = exact_prob_general(u, z);
        OutcomeKey key{z.z, false};
        dist[key] = value;
    });
    return dist;
}

DecayResult decay_experiment(
    size_t n_photons,
    size_t n_modes,
    double x,
    double delta,
    size_t draws,
    const std::vector<size_t> &cutoffs,
    RngStream &rng,
    unsigned threads) {
    if (draws == 0) {
        throw std::invalid_argument("decay_experiment: need at least one draw");
    }
    size_t n = n_photons;
    double m_pow_n = std::pow(static_cast<double>(n_modes), static_cast<double>(n));

    // distances[d][i]: truncation distance of draw d at cutoffs[i];
    // full_degree[d]: the same distance at l = N, which must vanish.
    std::vector<std::vector<double>> distances(draws, std::vector<double>(cutoffs.size(), 0.0));
    std::vector<double> full_degree(draws, 0.0);

    parallel_for(draws, threads, [&](size_t draw) {
        RngStream stream = rng.substream(draw);
        UnitaryMatrix u = haar_unitary(n_modes, stream);

        std::vector<double> sum_abs(cutoffs.size(), 0.0);
        std::vector<double> qbar_cf(cutoffs.size(), 0.0);
        double sum_abs_full = 0.0;
        double qbar_cf_full = 0.0;
        double noisy_cf = 0.0;

        std::vector<size_t> rows(n);
        std::iota(rows.begin(), rows.end(), 0);
        std::vector<double> terms(n + 1);
        double scale = std::sqrt(static_cast<double>(n_modes));

        for_each_subset(n_modes, n, [&](std::span<const size_t> modes) {
            OutcomeOrdered z(std::vector<size_t>(modes.begin(), modes.end()));
            double noisy = noisy_prob_analytic(u, z, x);
            noisy_cf += noisy;

            ComplexMatrix block = submatrix(u.matrix, rows, modes);
            for (auto &e : block.entries()) {
                e *= scale;
            }
            for (size_t k = 0; k <= n; k++) {
                terms[k] = squared_permanent_degree_term(block, k).real();
            }
            auto truncated_value = [&](size_t l) {
                double sum = 0.0;
                for (size_t k = l > n ? 0 : n - l; k <= n; k++) {
                    sum += std::pow(x, static_cast<double>(n - k)) * terms[k];
                }
                return sum / m_pow_n;
            };
            for (size_t i = 0; i < cutoffs.size(); i++) {
                double qv = truncated_value(cutoffs[i]);
                sum_abs[i] += std::abs(noisy - qv);
                qbar_cf[i] += qv;
            }
            double qv_full = truncated_value(n);
            sum_abs_full += std::abs(noisy - qv_full);
            qbar_cf_full += qv_full;
        });

        for (size_t i = 0; i < cutoffs.size(); i++) {
            distances[draw][i] = sum_abs[i] + std::abs(qbar_cf[i] - noisy_cf);
        }
        full_degree[draw] = sum_abs_full + std::abs(qbar_cf_full - noisy_cf);
    });

    DecayResult result;
    result.n = n_photons;
    result.m = n_modes;
    result.draws = draws;
    result.x = x;
    result.delta = delta;
    result.max_distance_at_full_degree = *std::max_element(full_degree.begin(), full_degree.end());
    double margin = 2.0 * std::sqrt(delta * (1.0 - delta) / static_cast<double>(draws));
    result.pass = result.max_distance_at_full_degree <= 1e-9;
    for (size_t i = 0; i < cutoffs.size(); i++) {
        DecayRow row;
        row.l = cutoffs[i];
        row.bound = tvd_bound(n_photons, x, cutoffs[i], delta);
        std::vector<double> per_draw(draws);
        for (size_t d = 0; d < draws; d++) {
            per_draw[d] = distances[d][i];
        }
        size_t within = 0;
        for (double v : per_draw) {
            if (v <= row.bound) {
                within++;
            }
        }
        row.pass_fraction = static_cast<double>(within) / static_cast<double>(draws);
        std::sort(per_draw.begin(), per_draw.end());
        row.median_distance = per_draw[draws / 2];
        row.mean_distance = std::accumulate(per_draw.begin(), per_draw.end(), 0.0) / static_cast<double>(draws);
        if (row.pass_fraction < (1.0 - delta) - margin) {
            result.pass = false;
        }
        result.rows.push_back(row);
    }
    return result;
}

namespace {

struct MomentAccumulator {
    std::string name;
    double target;
    std::vector<double> samples;
};

MomentCheck finish_check(const MomentAccumulator &acc) {
    size_t count = acc.samples.size();
    double mean = std::accumulate(acc.samples.begin(), acc.samples.end(), 0.0) / static_cast<double>(count);
    double ss = 0.0;
    for (double v : acc.samples) {
        ss += (v - mean) * (v - mean);
    }
    double std_error = std::sqrt(ss / static_cast<double>(count - 1) / static_cast<double>(count));
    MomentCheck check;
    check.name = acc.name;
    check.estimate = mean;
    check.std_error = std_error;
    check.target = acc.target;
    if (std_error == 0.0) {
        check.z_score = 0.0;
        check.pass = std::abs(mean - acc.target) <= 1e-12;
    } else {
        check.z_score = (mean - acc.target) / std_error;
        check.pass = std::abs(check.z_score) <= 3.0;
    }
    return check;
}

}  // namespace

OrthogonalityReport mc_orthogonality_suite(size_t n_photons, size_t samples, RngStream &rng, unsigned threads) {
    if (n_photons == 0 || n_photons > 3) {
        throw std::invalid_argument("mc_orthogonality_suite: photon count must lie in [1, 3] at default sample counts");
    }
    if (samples < 2) {
        throw std::invalid_argument("mc_orthogonality_suite: need at least 2 samples");
    }
    size_t n = n_photons;
    double n_fact_sq = static_cast<double>(factorial(n)) * static_cast<double>(factorial(n));

    std::vector<MomentAccumulator> accs;
    // circuit-noise degree terms: diagonal norms then cross terms
    for (size_t k1 = 0; k1 <= n; k1++) {
        for (size_t k2 = k1; k2 <= n; k2++) {
            std::ostringstream name;
            if (k1 == k2) {
                name << "gaussian |term_" << k1 << "|^2";
                accs.push_back({name.str(), n_fact_sq, {}});
            } else {
                name << "gaussian Re(term_" << k1 << " term_" << k2 << "*)";
                accs.push_back({name.str(), 0.0, {}});
                std::ostringstream imname;
                imname << "gaussian Im(term_" << k1 << " term_" << k2 << "*)";
                accs.push_back({imname.str(), 0.0, {}});
            }
        }
    }
    size_t gaussian_stats = accs.size();
    // distinguishability terms
    for (size_t k1 = 0; k1 <= n; k1++) {
        for (size_t k2 = k1; k2 <= n; k2++) {
            std::ostringstream name;
            if (k1 == k2) {
                name << "dist |term_" << k1 << "|^2";
                accs.push_back({name.str(), dist_norm_formula(n, k1), {}});
            } else {
                name << "dist Re(term_" << k1 << " term_" << k2 << "*)";
                accs.push_back({name.str(), 0.0, {}});
                std::ostringstream imname;
                imname << "dist Im(term_" << k1 << " term_" << k2 << "*)";
                accs.push_back({imname.str(), 0.0, {}});
            }
        }
    }
    double norm_total = 0.0;
    for (size_t k = 0; k <= n; k++) {
        norm_total += dist_norm_formula(n, k);
    }
    accs.push_back({"E|Per|^4 vs norm total", norm_total, {}});

    for (auto &acc : accs) {
        acc.samples.assign(samples, 0.0);
    }

    parallel_for(samples, threads, [&](size_t s) {
        RngStream stream = rng.substream(s);
        ComplexMatrix z = ginibre(n, n, 1.0, stream);
        std::vector<cdouble> f(n + 1), fd(n + 1);
        for (size_t k = 0; k <= n; k++) {
            f[k] = squared_permanent_degree_term(z, k);
            fd[k] = dist_degree_term(z, k);
        }
        size_t slot = 0;
        for (size_t k1 = 0; k1 <= n; k1++) {
            for (size_t k2 = k1; k2 <= n; k2++) {
                cdouble prod = f[k1] * std::conj(f[k2]);
                if (k1 == k2) {
                    accs[slot++].samples[s] = prod.real();
                } else {
                    accs[slot++].samples[s] = prod.real();
                    accs[slot++].samples[s] = prod.imag();
                }
            }
        }
        if (slot != gaussian_stats) {
            throw std::logic_error("mc_orthogonality_suite: slot bookkeeping broke");
        }
        for (size_t k1 = 0; k1 <= n; k1++) {
            for (size_t k2 = k1; k2 <= n; k2++) {
                cdouble prod = fd[k1] * std::conj(fd[k2]);
                if (k1 == k2) {
                    accs[slot++].samples[s] = prod.real();
                } else {
                    accs[slot++].samples[s] = prod.real();
                    accs[slot++].samples[s] = prod.imag();
                }
            }
        }
        accs[slot].samples[s] = std::pow(std::norm(permanent_ryser(z)), 2.0);
    });

    OrthogonalityReport report;
    report.n = n;
    report.samples = samples;
    report.pass = true;
    for (const auto &acc : accs) {
        report.checks.push_back(finish_check(acc));
        if (!report.checks.back().pass) {
            report.pass = false;
        }
    }
    return report;
}

}  // namespace bosonsim
