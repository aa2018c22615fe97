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

#include "bosonsim/random_matrices.hpp"

namespace bosonsim {

/// A prefix-marginal request against the truncated quasi-distribution.
struct MarginalQuery {
    std::vector<size_t> prefix;  // mode indices, length j in [0, N]
    double x;                    // noise strength
    size_t degree_cutoff;        // l
};

/// A possibly negative quasi-probability.
struct QuasiValue {
    double value;
};

/// Marginal of the degree-truncated quasi-distribution over unordered
/// outcomes: ((N-j)!/N!) · M^{-j} · sum_{k=max(0,j-l)}^{j} x^{j-k} · (term k).
/// Prefixes no longer than the cutoff are evaluated without truncation.
///
/// The prefix must be collision-free; prefixes holding a repeat are the
/// collision_oracle's job. Telescoping holds exactly: summing the extension
/// over all M next modes reproduces the prefix value, because each photon row
/// of the rescaled matrix has squared column-sum M and distinct rows have
/// vanishing cross sums.
QuasiValue truncated_marginal(const RescaledInputMatrix &z, std::span<const size_t> prefix, double x, size_t l);

QuasiValue truncated_marginal(const RescaledInputMatrix &z, const MarginalQuery &query);

/// Same evaluation with the collision-free check skipped. The polynomial is
/// well defined for repeated prefix entries; exposed only so experiments can
/// compare the leftover-mass collision assignment against raw truncated
/// values. Not used by the sampler.
QuasiValue truncated_marginal_raw(const RescaledInputMatrix &z, std::span<const size_t> prefix, double x, size_t l);

/// Value assigned to a prefix whose entries contain exactly one repeated
/// mode: the leftover mass of the collision-free base prefix, split equally
/// among the previously seen modes,
///   (marginal(base) - sum_{fresh r} marginal(base + r)) / (j - 1).
/// Invariant under permutations of the prefix. Requires l >= 1; the first
/// marginal is exact there, which grounds the construction.
QuasiValue collision_oracle(const RescaledInputMatrix &z, std::span<const size_t> prefix, double x, size_t l);

}  // namespace bosonsim
