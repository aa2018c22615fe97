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

#include "bosonsim/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace bosonsim {

IndexSet::IndexSet(std::vector<size_t> idx) : indices(std::move(idx)) {
    for (size_t i = 1; i < indices.size(); i++) {
        if (indices[i - 1] >= indices[i]) {
            throw std::invalid_argument("IndexSet: indices must be strictly increasing");
        }
    }
}

Bijection::Bijection(IndexSet dom, IndexSet cod, std::vector<size_t> map)
    : domain(std::move(dom)), codomain(std::move(cod)), mapping(std::move(map)) {
    if (domain.size() != codomain.size() || mapping.size() != domain.size()) {
        throw std::invalid_argument("Bijection: domain, codomain and mapping sizes must match");
    }
    std::vector<size_t> image = mapping;
    std::sort(image.begin(), image.end());
    if (image != codomain.indices) {
        throw std::invalid_argument("Bijection: mapping image must equal the codomain");
    }
}

IndexSet agreement_set(const Bijection &f, const Bijection &g) {
    if (f.domain != g.domain) {
        throw std::invalid_argument("agreement_set: bijections must share a domain");
    }
    std::vector<size_t> agree;
    for (size_t i = 0; i < f.domain.size(); i++) {
        if (f.mapping[i] == g.mapping[i]) {
            agree.push_back(f.domain.indices[i]);
        }
    }
    return IndexSet(std::move(agree));
}

uint64_t derangements(unsigned k) {
    if (k == 0) {
        return 1;
    }
    if (k == 1) {
        return 0;
    }
    uint64_t prev2 = 1;  // !0
    uint64_t prev1 = 0;  // !1
    for (unsigned i = 2; i <= k; i++) {
        uint64_t cur = (i - 1) * (prev1 + prev2);
        prev2 = prev1;
        prev1 = cur;
    }
    return prev1;
}

uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    uint64_t result = 1;
    for (unsigned i = 1; i <= k; i++) {
        result = result * (n - k + i) / i;
    }
    return result;
}

uint64_t factorial(unsigned n) {
    if (n > 20) {
        throw std::invalid_argument("factorial: overflow past 20!");
    }
    uint64_t result = 1;
    for (unsigned i = 2; i <= n; i++) {
        result *= i;
    }
    return result;
}

void first_subset(std::span<size_t> out) {
    for (size_t i = 0; i < out.size(); i++) {
        out[i] = i;
    }
}

bool next_subset(std::span<size_t> idx, size_t universe) {
    size_t size = idx.size();
    if (size == 0 || size > universe) {
        return false;
    }
    // Find the rightmost position that can still move up.
    size_t i = size;
    while (i > 0) {
        i--;
        if (idx[i] < universe - size + i) {
            idx[i]++;
            for (size_t j = i + 1; j < size; j++) {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    return false;
}

void for_each_subset(size_t universe, size_t size, const std::function<void(std::span<const size_t>)> &fn) {
    if (size > universe) {
        return;
    }
    std::vector<size_t> idx(size);
    first_subset(idx);
    do {
        fn(idx);
    } while (next_subset(idx, universe));
}

void for_each_bijection(
    const IndexSet &domain,
    const IndexSet &codomain,
    const std::function<void(const Bijection &)> &fn) {
    if (domain.size() != codomain.size()) {
        throw std::invalid_argument("for_each_bijection: domain and codomain sizes must match");
    }
    std::vector<size_t> mapping = codomain.indices;
    do {
        fn(Bijection(domain, codomain, mapping));
    } while (std::next_permutation(mapping.begin(), mapping.end()));
}

std::vector<IndexSet> all_subsets(size_t universe, size_t size) {
    std::vector<IndexSet> out;
    for_each_subset(universe, size, [&](std::span<const size_t> idx) {
        out.push_back(IndexSet(std::vector<size_t>(idx.begin(), idx.end())));
    });
    return out;
}

std::vector<Bijection> all_bijections(const IndexSet &domain, const IndexSet &codomain) {
    std::vector<Bijection> out;
    for_each_bijection(domain, codomain, [&](const Bijection &b) {
        out.push_back(b);
    });
    return out;
}

}  // namespace bosonsim
