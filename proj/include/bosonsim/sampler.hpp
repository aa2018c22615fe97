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

#include "bosonsim/marginal.hpp"
#include "bosonsim/outcome.hpp"
#include "bosonsim/rng.hpp"

namespace bosonsim {

struct SampleStep {
    /// Raw conditional weights per mode, before clamping; negative entries
    /// are what the clamp removes.
    std::vector<double> weights;
    bool fallback_uniform = false;
    size_t chosen = 0;
};

struct SampleRecord {
    /// Draw-order modes; shorter than N when the draw ended in a collision.
    OutcomeUnordered outcome;
    bool collision = false;
    size_t oracle_calls = 0;
    /// Per-step audit trail; filled only when requested.
    std::vector<SampleStep> steps;
};

/// Draws one outcome from the truncated quasi-distribution by sequential
/// conditionals: at each step the M extension weights are computed (fresh
/// modes through the marginal oracle, repeated modes through the leftover
/// split), negatives are clamped to zero, the rest renormalized, and one mode
/// is drawn by inverse CDF with left-closed intervals. Drawing an already-seen
/// mode ends the sample as the aggregate collision outcome.
///
/// Uses at most M oracle calls per step and M·N per sample. A step whose
/// clamped weights all vanish falls back to uniform over fresh modes and is
/// flagged in the audit trail.
SampleRecord draw_sample(const RescaledInputMatrix &z, double x, size_t l, RngStream &rng, bool keep_audit = false);

/// The exact distribution the sampler induces, by exhaustive tree walk over
/// collision-free paths (no randomness). Keys are ordered outcomes; the
/// aggregate collision probability is returned separately.
struct InducedDistribution {
    std::map<std::vector<size_t>, double> ordered;
    double collision_mass = 0.0;
};

InducedDistribution enumerate_induced_distribution(const RescaledInputMatrix &z, double x, size_t l);

/// Checks that the 1-norm distance between two permutation-symmetric
/// distributions over unordered outcomes equals the distance between their
/// ordered aggregations, and returns the common value. Throws if the first
/// argument is not symmetric or the two sides disagree beyond 1e-9.
double tvd_ordered_vs_unordered(
    const std::map<std::vector<size_t>, double> &p_unordered,
    const std::map<std::vector<size_t>, double> &q_unordered);

}  // namespace bosonsim
