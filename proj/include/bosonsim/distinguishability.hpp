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

/// Partial distinguishability of the photons: x = 1 fully indistinguishable,
/// x = 0 fully distinguishable. Every permutation pair that disagrees on a
/// position pays one factor of x per disagreement.
struct DistinguishabilitySpec {
    double x;

    explicit DistinguishabilitySpec(double x);
};

/// Exact partially-distinguishable outcome probability by brute-force
/// enumeration of all (N!)^2 permutation pairs, each weighted by
/// x^(number of disagreeing positions). x = 1 reproduces the noiseless
/// |Per(U_{N,z})|^2 and x = 0 gives Per of the entrywise |U|^2. Guarded to
/// N <= 7. The result is real to float precision; the imaginary part is
/// checked and dropped.
double dist_prob_exact(const UnitaryMatrix &u, const OutcomeOrdered &z, double x);

/// Degree-(N-k) component of the squared permanent under the
/// distinguishability grading, where matched positions contribute |z|^2
/// factors of degree zero and mismatched positions contribute degree-one
/// cross factors constrained to have no positionwise agreement. Summing
/// x^{N-k} times these components over k reproduces the exact noisy
/// probability (after the M^N rescale). Guarded to N <= 7.
cdouble dist_degree_term(const ComplexMatrix &z, size_t k);

/// Closed form for the Gaussian second moment E|dist_degree_term|^2,
/// evaluated in exact integer arithmetic:
///   C(N,k)^2 (N-k)! !(N-k) · sum_j C(k,j)^2 j! (k-j)! !(k-j) 2^j.
double dist_norm_formula(size_t n, size_t k);

/// Cutoff rule for the distinguishability model; same shape as the circuit
/// noise rule with an extra factor e inside the logarithm.
size_t dist_cutoff(size_t n_photons, double x, double eps, double delta);

/// Fully distinguishable photons do not interfere, so they can be sampled one
/// by one: photon i lands in mode r with probability |U(i, r)|^2.
OutcomeUnordered distinguishable_sampler(const UnitaryMatrix &u, size_t n_photons, RngStream &rng);

/// Number of summands in the degree-(N-k) component:
/// C(N,k)^2 · k! · (N-k)! · !(N-k). This count never drops below N!, which is
/// what blocks a cheap truncated evaluator for this noise model.
uint64_t dist_summand_count(size_t n, size_t k);

struct DistBarrierReport {
    size_t n;
    std::vector<uint64_t> summand_counts;  // indexed by k
    uint64_t n_factorial;
    bool all_at_least_n_factorial;
};

DistBarrierReport dist_barrier_report(size_t n);

}  // namespace bosonsim
