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

#include "bosonsim/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bosonsim {

namespace {

struct StepWeights {
    std::vector<double> raw;      // per mode, before clamping
    std::vector<double> clamped;  // negatives zeroed
    double clamped_total;
    bool fallback_uniform;
    size_t oracle_calls;
};

// Extension weights of a collision-free prefix: the marginal oracle on fresh
// modes, the shared leftover split on already-seen modes.
StepWeights step_weights(
    const RescaledInputMatrix &z,
    const std::vector<size_t> &prefix,
    double prefix_value,
    double x,
    size_t l) {
    size_t m = z.n_modes;
    StepWeights out;
    out.raw.assign(m, 0.0);
    out.oracle_calls = 0;

    std::vector<size_t> extended(prefix);
    extended.push_back(0);
    double fresh_sum = 0.0;
    for (size_t mode = 0; mode < m; mode++) {
        if (std::find(prefix.begin(), prefix.end(), mode) != prefix.end()) {
            continue;
        }
        extended.back() = mode;
        out.raw[mode] = truncated_marginal(z, extended, x, l).value;
        out.oracle_calls++;
        fresh_sum += out.raw[mode];
    }
    if (!prefix.empty()) {
        double leftover = (prefix_value - fresh_sum) / static_cast<double>(prefix.size());
        for (size_t mode : prefix) {
            out.raw[mode] = leftover;
        }
    }

    out.clamped = out.raw;
    for (double &w : out.clamped) {
        w = std::max(w, 0.0);
    }
    out.clamped_total = 0.0;
    for (double w : out.clamped) {
        out.clamped_total += w;
    }
    out.fallback_uniform = !(out.clamped_total > 0.0);
    if (out.fallback_uniform) {
        size_t fresh = m - prefix.size();
        for (size_t mode = 0; mode < m; mode++) {
            bool seen = std::find(prefix.begin(), prefix.end(), mode) != prefix.end();
            out.clamped[mode] = seen ? 0.0 : 1.0 / static_cast<double>(fresh);
        }
        out.clamped_total = 1.0;
    }
    return out;
}

void check_sampler_args(const RescaledInputMatrix &z, size_t l) {
    if (l < 1) {
        throw std::invalid_argument("sampler: the degree cutoff must be at least 1");
    }
    if (l > z.n_photons) {
        throw std::invalid_argument("sampler: cutoff exceeds the photon count");
    }
    if (z.n_photons > z.n_modes) {
        throw std::invalid_argument("sampler: more photons than modes");
    }
}

}  // namespace

SampleRecord draw_sample(const RescaledInputMatrix &z, double x, size_t l, RngStream &rng, bool keep_audit) {
    check_sampler_args(z, l);
    size_t n = z.n_photons;
    size_t m = z.n_modes;

    SampleRecord record;
    std::vector<size_t> prefix;
    prefix.reserve(n);
    double prefix_value = 1.0;

    for (size_t step = 0; step < n; step++) {
        StepWeights w = step_weights(z, prefix, prefix_value, x, l);
        record.oracle_calls += w.oracle_calls;

        // Inverse CDF over modes in index order, left-closed intervals.
        double u = rng.uniform() * w.clamped_total;
        double cumulative = 0.0;
        size_t chosen = m;
        for (size_t mode = 0; mode < m; mode++) {
            if (w.clamped[mode] <= 0.0) {
                continue;
            }
            cumulative += w.clamped[mode];
            if (u < cumulative) {
                chosen = mode;
                break;
            }
            chosen = mode;  // guards against accumulated rounding at u ~ total
        }

        if (keep_audit) {
            record.steps.push_back(SampleStep{w.raw, w.fallback_uniform, chosen});
        }

        if (std::find(prefix.begin(), prefix.end(), chosen) != prefix.end()) {
            record.outcome.r = prefix;
            record.collision = true;
            return record;
        }
        prefix_value = w.raw[chosen];
        prefix.push_back(chosen);
    }
    record.outcome.r = prefix;
    record.collision = false;
    return record;
}

InducedDistribution enumerate_induced_distribution(const RescaledInputMatrix &z, double x, size_t l) {
    check_sampler_args(z, l);
    size_t n = z.n_photons;
    size_t m = z.n_modes;

    InducedDistribution result;
    std::vector<size_t> prefix;

    auto walk = [&](auto &&self, double reach_prob, double prefix_value) -> void {
        if (prefix.size() == n) {
            std::vector<size_t> key(prefix);
            std::sort(key.begin(), key.end());
            result.ordered[key] += reach_prob;
            return;
        }
        StepWeights w = step_weights(z, prefix, prefix_value, x, l);
        for (size_t mode = 0; mode < m; mode++) {
            if (w.clamped[mode] <= 0.0) {
                continue;
            }
            double p = reach_prob * w.clamped[mode] / w.clamped_total;
            if (std::find(prefix.begin(), prefix.end(), mode) != prefix.end()) {
                result.collision_mass += p;
            } else {
                prefix.push_back(mode);
                self(self, p, w.raw[mode]);
                prefix.pop_back();
            }
        }
    };
    walk(walk, 1.0, 1.0);
    return result;
}

double tvd_ordered_vs_unordered(
    const std::map<std::vector<size_t>, double> &p_unordered,
    const std::map<std::vector<size_t>, double> &q_unordered) {
    // Symmetry check: every permutation of a key must carry the same value.
    for (const auto &[r, value] : p_unordered) {
        std::vector<size_t> perm(r);
        std::sort(perm.begin(), perm.end());
        do {
            auto it = p_unordered.find(perm);
            double other = it == p_unordered.end() ? 0.0 : it->second;
            if (std::abs(other - value) > 1e-12) {
                throw std::invalid_argument("tvd_ordered_vs_unordered: distribution is not permutation symmetric");
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    double unordered_norm = 0.0;
    std::map<std::vector<size_t>, double> p_z, q_z;
    auto fold = [](const std::map<std::vector<size_t>, double> &src, std::map<std::vector<size_t>, double> &dst) {
        for (const auto &[r, value] : src) {
            std::vector<size_t> key(r);
            std::sort(key.begin(), key.end());
            dst[key] += value;
        }
    };
    fold(p_unordered, p_z);
    fold(q_unordered, q_z);

    std::map<std::vector<size_t>, double> all_r(p_unordered);
    for (const auto &[r, value] : q_unordered) {
        all_r.try_emplace(r, 0.0);
    }
    for (const auto &[r, unused] : all_r) {
        auto pit = p_unordered.find(r);
        auto qit = q_unordered.find(r);
        double pv = pit == p_unordered.end() ? 0.0 : pit->second;
        double qv = qit == q_unordered.end() ? 0.0 : qit->second;
        unordered_norm += std::abs(pv - qv);
    }

    double ordered_norm = 0.0;
    std::map<std::vector<size_t>, double> all_z(p_z);
    for (const auto &[zkey, value] : q_z) {
        all_z.try_emplace(zkey, 0.0);
    }
    for (const auto &[zkey, unused] : all_z) {
        auto pit = p_z.find(zkey);
        auto qit = q_z.find(zkey);
        double pv = pit == p_z.end() ? 0.0 : pit->second;
        double qv = qit == q_z.end() ? 0.0 : qit->second;
        ordered_norm += std::abs(pv - qv);
    }

    if (std::abs(ordered_norm - unordered_norm) > 1e-9) {
        throw std::runtime_error("tvd_ordered_vs_unordered: the two norms disagree beyond tolerance");
    }
    return ordered_norm;
}

}  // namespace bosonsim
