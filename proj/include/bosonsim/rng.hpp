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

#include <complex>
#include <cstdint>
#include <random>

namespace bosonsim {

/// Deterministic random stream addressed by (master seed, stream index).
///
/// The same pair always produces the same draw sequence, and distinct indices
/// give statistically independent streams, so Monte Carlo work can be split
/// across workers without losing reproducibility. Gaussian variates are
/// produced by our own Box-Muller transform instead of std::normal_distribution,
/// whose algorithm is implementation-defined and would tie outputs to a
/// particular standard library.
class RngStream {
   public:
    RngStream(uint64_t master_seed, uint64_t stream_index);

    uint64_t master_seed() const {
        return master_seed_;
    }
    uint64_t stream_index() const {
        return stream_index_;
    }

    /// Derives an independent stream; deterministic in (this stream, salt).
    RngStream substream(uint64_t salt) const;

    uint64_t next_u64();

    /// Uniform double in [0, 1) with 53 bits of resolution.
    double uniform();

    /// Standard normal N(0, 1).
    double gaussian();

    /// Standard complex normal: E[z] = 0, E[|z|^2] = 1
    /// (real and imaginary parts each have variance 1/2).
    std::complex<double> complex_gaussian();

   private:
    uint64_t master_seed_;
    uint64_t stream_index_;
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace bosonsim
