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

#include <string>
#include <vector>

namespace bosonsim {

/// One mode index per photon, in draw order. Duplicates mean collision.
struct OutcomeUnordered {
    std::vector<size_t> r;
};

/// Mode indices in nondecreasing order; the canonical representative of the
/// N!/(multiplicities) unordered outcomes that share it.
struct OutcomeOrdered {
    std::vector<size_t> z;

    explicit OutcomeOrdered(std::vector<size_t> modes);
};

/// Photon count per mode; sums to the photon number.
struct OutcomeOccupation {
    std::vector<size_t> m;
};

OutcomeOrdered to_ordered(const OutcomeUnordered &r);
OutcomeOrdered to_ordered(const OutcomeOccupation &m);
OutcomeOccupation to_occupation(const OutcomeOrdered &z, size_t n_modes);
/// Canonical (sorted) unordered representative of z.
OutcomeUnordered to_unordered(const OutcomeOrdered &z);

bool is_collision_free(const OutcomeOrdered &z);
bool is_collision_free(const OutcomeUnordered &r);

/// Validates that m sums to the expected photon count.
void check_occupation(const OutcomeOccupation &m, size_t n_photons);

/// Product of m_i! over all modes, the multiplicity factor of collision
/// outcome probabilities.
double occupation_multiplicity(const OutcomeOrdered &z);

/// Space-separated mode indices, e.g. "0 2 5".
std::string outcome_to_string(const OutcomeOrdered &z);
/// Parses "0 2 5" into an ordered outcome (input need not be sorted).
OutcomeOrdered outcome_from_string(const std::string &text);

}  // namespace bosonsim
