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

/// Circuit-level Gaussian noise: the circuit matrix U is replaced by
/// sqrt(x)·U + sqrt(1-x)·Y with Y a complex Ginibre matrix of entry variance
/// 1/M. x = 1 is noiseless; x = 0 washes every outcome to uniform.
struct GaussianNoiseSpec {
    double x1 = 1.0;
    unsigned gamma = 1;  // effective strength x = x1^gamma

    static GaussianNoiseSpec direct(double x);
    static GaussianNoiseSpec scaled(double x1, unsigned gamma);
    double effective_x() const;
};

/// Degree cutoff for truncated evaluation, optionally derived from an error
/// budget (target total variation error eps with failure probability delta).
struct CutoffPolicy {
    size_t degree_cutoff;

    static CutoffPolicy fixed(size_t l, size_t n_photons);
    static CutoffPolicy from_error_budget(size_t n_photons, double x, double eps, double delta);
};

/// Noiseless collision-free outcome probability |Per(U_{N,z})|^2 for the
/// ordered outcome z; throws on collision outcomes (use exact_prob_general).
double exact_prob(const UnitaryMatrix &u, const OutcomeOrdered &z);

/// Noiseless ordered-outcome probability for any z, collisions included:
/// |Per(U_{N,z})|^2 / prod_i m_i!.
double exact_prob_general(const UnitaryMatrix &u, const OutcomeOrdered &z);

/// Exact expectation over the Ginibre noise draw of the collision-free
/// outcome probability. Closed form: sum over k of
///   x^k (1-x)^{N-k} / M^{N-k} · (N-k)! · sum_{K,K'} |Per(U_{K,K'})|^2
/// with K ranging over k-subsets of input rows and K' over k-subsets of z.
double noisy_prob_analytic(const UnitaryMatrix &u, const OutcomeOrdered &z, double x);

/// Same quantity through the degree decomposition:
/// (1/M^N) · sum_k x^{N-k} · (degree term k of sqrt(M)·U_{N,z}).
/// Kept as a separate route; the two must agree to float precision.
double noisy_prob_decomposition(const UnitaryMatrix &u, const OutcomeOrdered &z, double x);

struct McEstimate {
    double estimate;
    double std_error;
    size_t samples;
};

/// Monte Carlo estimate of the noisy outcome probability: empirical mean of
/// |Per((sqrt(x)·U + sqrt(1-x)·Y)_{N,z})|^2 over iid noise draws.
McEstimate noisy_prob_mc(const UnitaryMatrix &u, const OutcomeOrdered &z, double x, size_t samples, RngStream &rng);

/// Smallest degree cutoff l in [0, N] meeting the error budget; the
/// truncation error bound scales as x^{l+1}. x = 0 needs no polynomial terms
/// (l = 0); x = 1 admits no truncation (l = N).
size_t select_cutoff(size_t n_photons, double x, double eps, double delta);

/// Closed-form bound on the total variation distance between the noisy
/// distribution and its degree-l truncation, holding for a 1-delta fraction
/// of Haar-random circuits: 2·sqrt(N)·x^{l+1}/sqrt(delta).
double tvd_bound(size_t n_photons, double x, size_t l, double delta);

}  // namespace bosonsim
