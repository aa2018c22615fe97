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

#include "bosonsim/complex_matrix.hpp"

namespace bosonsim {

// The squared permanent of an N x N matrix splits into N+1 orthogonal
// components indexed by k: the k-th component collects every permutation pair
// that matches on exactly-k positions after pulling constants out of the
// matched factors, and is a polynomial of degree 2(N-k) in the matrix entries.
// Entrywise Gaussian smoothing of strength x scales it by x^{N-k}, so
// truncating high-degree components approximates smoothed probabilities.
//
// The same construction evaluates components of length-j prefix marginals,
// where the cost is (N·j)^{j-k} term evaluations instead of anything
// factorial in N.

/// Degree-2(j-k) component of the length-j prefix marginal, where j is the
/// prefix length, zrow holds one row per photon and one column per mode, and
/// prefix lists the marginalized modes (columns). k counts the matched
/// positions folded into the combinatorial prefactor k!·C(N-j+k, k).
///
/// No collision checks: the expression is a plain polynomial in matrix
/// entries and is well defined for repeated prefix entries too.
cdouble marginal_degree_term(const ComplexMatrix &zrow, std::span<const size_t> prefix, size_t k);

/// Degree-2(N-k) component of |Per(z)|^2 for a square matrix: the full-length
/// marginal term with prefix (0, 1, ..., N-1). Summing over k = 0..N
/// reproduces |Per(z)|^2 exactly.
cdouble squared_permanent_degree_term(const ComplexMatrix &z, size_t k);

}  // namespace bosonsim
