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

#include "bosonsim/outcome.hpp"
#include "bosonsim/random_matrices.hpp"

namespace bosonsim {

/// Uniform photon loss commuted to the input: each photon independently
/// survives with transmission rate eta, either given directly or as
/// eta1^depth.
struct LossSpec {
    double eta;

    static LossSpec direct(double eta);
    static LossSpec per_depth(double eta1, unsigned depth);
};

/// Probability of one unordered k-click outcome (k distinct modes, any order)
/// with N input photons: eta^k (1-eta)^{N-k} / k! · sum over k-subsets T of
/// input rows of |Per(U_{T,clicks})|^2. The surviving-photon sector is
/// binomial, so these values integrate to C(N,k) eta^k (1-eta)^{N-k} per
/// sector.
double lossy_prob(const UnitaryMatrix &u, std::span<const size_t> clicks, double eta, size_t n_photons);

/// Observable probability of a detection pattern with possible collisions,
/// given as the sorted mode multiset of the k surviving photons:
/// eta^k (1-eta)^{N-k} · sum_T |Per(U_{T,z})|^2 / prod_i m_i!.
/// This is the enumeration-side generalization of lossy_prob; the public
/// distinct-click operation stays restricted to collision-free outcomes.
double lossy_outcome_prob(const UnitaryMatrix &u, const OutcomeOrdered &z, double eta, size_t n_photons);

/// Degree-l truncation of the loss expansion. Truncation only changes the
/// sector prefactor: (1-eta)^{N-k} becomes sum_{j=0}^{l-k} C(N-k,j)(-eta)^j,
/// and outcomes with more than l clicks get value zero. l = N closes the
/// binomial sum and reproduces lossy_prob exactly.
double lossy_truncated(const UnitaryMatrix &u, std::span<const size_t> clicks, double eta, size_t l, size_t n_photons);

/// Truncated counterpart of lossy_outcome_prob, for enumeration experiments.
double lossy_truncated_outcome_prob(
    const UnitaryMatrix &u, const OutcomeOrdered &z, double eta, size_t l, size_t n_photons);

/// Binomial tail sum_{k=l+1}^{N} C(N,k) eta^k (1-eta)^{N-k}: the sector mass
/// a degree-l truncation discards outright.
double binomial_tail_mass(size_t n_photons, double eta, size_t l);

struct LossBarrierReport {
    size_t n;
    double eta;
    size_t l;
    double discarded_mass;
    /// Smallest cutoff keeping the discarded mass at or below the target.
    size_t required_l;
    double target_mass;
    double mean_clicks;    // eta·N
    double stddev_clicks;  // sqrt(N·eta·(1-eta))
};

/// Quantifies why truncation needs l of order eta·N: reports the discarded
/// binomial mass at cutoff l, the smallest cutoff meeting a target mass, and
/// the click-number mean/spread.
LossBarrierReport loss_barrier_report(size_t n_photons, double eta, size_t l, double target_mass);

}  // namespace bosonsim
