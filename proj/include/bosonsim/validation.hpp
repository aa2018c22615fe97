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

#include <map>
#include <string>

#include "bosonsim/gaussian_noise.hpp"
#include "bosonsim/outcome.hpp"
#include "bosonsim/random_matrices.hpp"

namespace bosonsim {

/// A collision-free ordered outcome, or the aggregate collision symbol.
struct OutcomeKey {
    std::vector<size_t> modes;
    bool collision = false;

    static OutcomeKey of(std::vector<size_t> z);
    static OutcomeKey c();
    std::string str() const;
    auto operator<=>(const OutcomeKey &) const = default;
};

/// Distribution (or quasi-distribution) over outcome keys.
using Distribution = std::map<OutcomeKey, double>;

/// 1-norm distance sum |p - q| over the union of keys. No 1/2 factor. p must
/// be non-negative; q may carry negative quasi-probability entries.
double tvd(const Distribution &p, const Distribution &q);

/// How the truncated quasi-distribution treats collision outcomes when
/// enumerated over the full outcome space.
enum class CollisionAssignment {
    leftover_split,  // sequential leftover-mass construction; sums to one
    zeroed,          // collisions set to zero; loses the collision mass
    raw_truncated,   // raw polynomial values at repeated prefixes
};

/// Full truncated quasi-distribution over collision-free ordered outcomes
/// plus the aggregate collision key. With the leftover assignment the values
/// sum to 1 by construction.
Distribution enumerate_qbar(const UnitaryMatrix &u, size_t n_photons, double x, size_t l);

/// Exact noisy distribution over the same keys; the collision key takes the
/// leftover 1 - sum(collision-free).
Distribution enumerate_noisy(const UnitaryMatrix &u, size_t n_photons, double x);

/// Noiseless distribution over all ordered outcomes including collisions.
Distribution enumerate_exact(const UnitaryMatrix &u, size_t n_photons);

struct DecayRow {
    size_t l;
    double bound;
    double pass_fraction;  // of Haar draws with distance within the bound
    double median_distance;
    double mean_distance;
};

struct DecayResult {
    size_t n, m, draws;
    double x, delta;
    std::vector<DecayRow> rows;
    double max_distance_at_full_degree;
    bool pass;
};

/// Draws Haar circuits and measures the truncation distance
/// sum_z |noisy(z) - truncated(z)| per cutoff, checking the closed-form bound
/// holds for at least a 1-delta fraction (minus a two-sigma binomial margin).
DecayResult decay_experiment(
    size_t n_photons,
    size_t n_modes,
    double x,
    double delta,
    size_t draws,
    const std::vector<size_t> &cutoffs,
    RngStream &rng,
    unsigned threads = 1);

struct MomentCheck {
    std::string name;
    double estimate;
    double std_error;
    double target;
    double z_score;
    bool pass;  // |z| <= 3, or exact match when the spread vanishes
};

struct OrthogonalityReport {
    size_t n;
    size_t samples;
    std::vector<MomentCheck> checks;
    bool pass;
};

/// Monte Carlo over Ginibre matrices: pairwise inner products of the
/// circuit-noise degree terms against (N!)^2 on the diagonal and 0 off it,
/// the distinguishability-grading norms against their closed forms, and the
/// fourth permanent moment against the norm total. Pass means every check is
/// within 3 standard errors (several checks run, so an occasional marginal
/// z-score is expected: Bonferroni applies if used as a gate).
OrthogonalityReport mc_orthogonality_suite(size_t n_photons, size_t samples, RngStream &rng, unsigned threads = 1);

}  // namespace bosonsim
