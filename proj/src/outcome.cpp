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

#include "bosonsim/outcome.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bosonsim {

OutcomeOrdered::OutcomeOrdered(std::vector<size_t> modes) : z(std::move(modes)) {
    if (!std::is_sorted(z.begin(), z.end())) {
        throw std::invalid_argument("OutcomeOrdered: mode list must be nondecreasing");
    }
}

OutcomeOrdered to_ordered(const OutcomeUnordered &r) {
    std::vector<size_t> z = r.r;
    std::sort(z.begin(), z.end());
    return OutcomeOrdered(std::move(z));
}

OutcomeOrdered to_ordered(const OutcomeOccupation &m) {
    std::vector<size_t> z;
    for (size_t mode = 0; mode < m.m.size(); mode++) {
        z.insert(z.end(), m.m[mode], mode);
    }
    return OutcomeOrdered(std::move(z));
}

OutcomeOccupation to_occupation(const OutcomeOrdered &z, size_t n_modes) {
    OutcomeOccupation m;
    m.m.assign(n_modes, 0);
    for (size_t mode : z.z) {
        if (mode >= n_modes) {
            throw std::out_of_range("to_occupation: mode index exceeds mode count");
        }
        m.m[mode]++;
    }
    return m;
}

OutcomeUnordered to_unordered(const OutcomeOrdered &z) {
    return OutcomeUnordered{z.z};
}

bool is_collision_free(const OutcomeOrdered &z) {
    return std::adjacent_find(z.z.begin(), z.z.end()) == z.z.end();
}

bool is_collision_free(const OutcomeUnordered &r) {
    return is_collision_free(to_ordered(r));
}

void check_occupation(const OutcomeOccupation &m, size_t n_photons) {
    size_t total = std::accumulate(m.m.begin(), m.m.end(), size_t{0});
    if (total != n_photons) {
        throw std::invalid_argument("check_occupation: occupation numbers do not sum to the photon count");
    }
}

double occupation_multiplicity(const OutcomeOrdered &z) {
    double factor = 1.0;
    size_t run = 1;
    for (size_t i = 1; i < z.z.size(); i++) {
        if (z.z[i] == z.z[i - 1]) {
            run++;
            factor *= static_cast<double>(run);
        } else {
            run = 1;
        }
    }
    return factor;
}

std::string outcome_to_string(const OutcomeOrdered &z) {
    std::ostringstream out;
    for (size_t i = 0; i < z.z.size(); i++) {
        if (i) {
            out << ' ';
        }
        out << z.z[i];
    }
    return out.str();
}

OutcomeOrdered outcome_from_string(const std::string &text) {
    std::istringstream in(text);
    std::vector<size_t> modes;
    long long value;
    while (in >> value) {
        if (value < 0) {
            throw std::invalid_argument("outcome_from_string: negative mode index");
        }
        modes.push_back(static_cast<size_t>(value));
    }
    if (!in.eof()) {
        throw std::invalid_argument("outcome_from_string: malformed outcome string");
    }
    std::sort(modes.begin(), modes.end());
    return OutcomeOrdered(std::move(modes));
}

}  // namespace bosonsim
