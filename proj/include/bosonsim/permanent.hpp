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

/// Permanent by direct enumeration of all n! permutations.
///
/// Sum over sigma of prod_i A(sigma(i), i). Intentionally naive: this is the
/// independent oracle the Ryser kernel is checked against, so it must stay a
/// separate code path. Guarded to n <= 9.
///
/// The permanent of the 0x0 matrix is 1; the k=0 term of the noisy-probability
/// sum relies on that convention.
cdouble permanent_naive(const ComplexMatrix &a);

/// Permanent via Ryser's inclusion-exclusion formula with Gray-code subset
/// updates, O(2^n * n) arithmetic.
cdouble permanent_ryser(const ComplexMatrix &a);

}  // namespace bosonsim
