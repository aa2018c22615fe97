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

#include "bosonsim/rng.hpp"

#include <cmath>

namespace bosonsim {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

uint64_t mix_seed(uint64_t master, uint64_t index) {
    return splitmix64(splitmix64(master) ^ splitmix64(index + 0x51ed2701a3b5c917ULL));
}

}  // namespace

RngStream::RngStream(uint64_t master_seed, uint64_t stream_index)
    : master_seed_(master_seed), stream_index_(stream_index), engine_(mix_seed(master_seed, stream_index)) {
}

RngStream RngStream::substream(uint64_t salt) const {
    return RngStream(master_seed_, splitmix64(stream_index_ ^ splitmix64(salt + 1)));
}

uint64_t RngStream::next_u64() {
    return engine_();
}

double RngStream::uniform() {
    return (engine_() >> 11) * 0x1.0p-53;
}

double RngStream::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // Box-Muller. u1 is kept away from 0 so the log is finite.
    double u1;
    do {
        u1 = uniform();
    } while (u1 <= 0.0);
    double u2 = uniform();
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

std::complex<double> RngStream::complex_gaussian() {
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    double re = gaussian();
    double im = gaussian();
    return {re * inv_sqrt2, im * inv_sqrt2};
}

}  // namespace bosonsim
