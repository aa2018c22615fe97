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

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace bosonsim {

/// Sorted list of distinct indices inside a declared universe.
struct IndexSet {
    std::vector<size_t> indices;

    IndexSet() = default;
    explicit IndexSet(std::vector<size_t> idx);

    size_t size() const {
        return indices.size();
    }
    bool operator==(const IndexSet &other) const = default;
};

/// Bijection between two equal-size index sets; mapping[i] is the image of
/// domain.indices[i].
struct Bijection {
    IndexSet domain;
    IndexSet codomain;
    std::vector<size_t> mapping;

    Bijection(IndexSet dom, IndexSet cod, std::vector<size_t> map);

    size_t apply(size_t domain_position) const {
        return mapping[domain_position];
    }
};

/// Indices of the shared domain on which f and g agree.
IndexSet agreement_set(const Bijection &f, const Bijection &g);

/// Number of derangements !k (permutations with no fixed point), by the
/// recurrence !k = (k-1)(!(k-1) + !(k-2)), !0 = 1, !1 = 0.
uint64_t derangements(unsigned k);

uint64_t binomial(unsigned n, unsigned k);
uint64_t factorial(unsigned n);

// ---------------------------------------------------------------------------
// Lazy enumeration. The evaluators fold over subsets and bijections in place:
// nothing factorial-sized is ever materialized, and the lexicographic order is
// fixed so order-dependent float summation is reproducible.
// ---------------------------------------------------------------------------

/// Loads the lexicographically first size-|out| subset {0, 1, ..., size-1}.
void first_subset(std::span<size_t> out);

/// Advances a subset of {0, ..., universe-1} to its lexicographic successor.
/// Returns false once the last subset has been consumed.
bool next_subset(std::span<size_t> idx, size_t universe);

/// Calls fn for every size-`size` subset of {0, ..., universe-1}, in
/// lexicographic order. size > universe yields no calls (empty stream).
void for_each_subset(size_t universe, size_t size, const std::function<void(std::span<const size_t>)> &fn);

/// Calls fn for every bijection domain -> codomain, presented as the codomain
/// permuted over the fixed domain order. Throws on size mismatch.
void for_each_bijection(
    const IndexSet &domain,
    const IndexSet &codomain,
    const std::function<void(const Bijection &)> &fn);

/// Materializing helpers for tests and small consumers.
std::vector<IndexSet> all_subsets(size_t universe, size_t size);
std::vector<Bijection> all_bijections(const IndexSet &domain, const IndexSet &codomain);

}  // namespace bosonsim
