/*
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================
*/
#include "specsep/rng.hpp"

#include <cmath>

namespace specsep {

namespace {

constexpr std::uint32_t kPhiloxW32A = 0x9E3779B9;
constexpr std::uint32_t kPhiloxW32B = 0xBB67AE85;
constexpr std::uint32_t kPhiloxM4x32A = 0xD2511F53;
constexpr std::uint32_t kPhiloxM4x32B = 0xCD9E8D57;

inline void mul_hi_lo(std::uint32_t a, std::uint32_t b, std::uint32_t& lo, std::uint32_t& hi) {
    const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
    lo = static_cast<std::uint32_t>(product);
    hi = static_cast<std::uint32_t>(product >> 32);
}

inline void philox_round(std::array<std::uint32_t, 4>& ctr, const std::array<std::uint32_t, 2>& key) {
    std::uint32_t lo0, hi0, lo1, hi1;
    mul_hi_lo(kPhiloxM4x32A, ctr[0], lo0, hi0);
    mul_hi_lo(kPhiloxM4x32B, ctr[2], lo1, hi1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
}

}  // namespace

PhiloxRng::PhiloxRng(std::uint64_t seed, std::uint64_t stream)
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
      stream_{static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)} {}

void PhiloxRng::refill() {
    std::array<std::uint32_t, 4> ctr = {static_cast<std::uint32_t>(block_),
                                        static_cast<std::uint32_t>(block_ >> 32), stream_[0],
                                        stream_[1]};
    std::array<std::uint32_t, 2> key = key_;
    for (int round = 0; round < 10; ++round) {
        philox_round(ctr, key);
        key[0] += kPhiloxW32A;
        key[1] += kPhiloxW32B;
    }
    buf_ = ctr;
    buf_pos_ = 0;
    ++block_;
}

std::uint32_t PhiloxRng::next_u32() {
    if (buf_pos_ == 4) refill();
    return buf_[buf_pos_++];
}

std::uint64_t PhiloxRng::next_u64() {
    const std::uint64_t lo = next_u32();
    const std::uint64_t hi = next_u32();
    return lo | (hi << 32);
}

double PhiloxRng::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double PhiloxRng::next_unit_open() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

double PhiloxRng::next_gaussian() {
    if (has_gauss_) {
        has_gauss_ = false;
        return gauss_cache_;
    }
    const double r = std::sqrt(-2.0 * std::log(next_unit_open()));
    const double theta = 2.0 * M_PI * next_unit();
    gauss_cache_ = r * std::sin(theta);
    has_gauss_ = true;
    return r * std::cos(theta);
}

std::complex<double> PhiloxRng::next_complex_gaussian() {
    constexpr double inv_sqrt2 = 0.7071067811865475244;
    const double re = next_gaussian();
    const double im = next_gaussian();
    return {re * inv_sqrt2, im * inv_sqrt2};
}

double PhiloxRng::next_rademacher() {
    return (next_u32() & 1u) ? 1.0 : -1.0;
}

double PhiloxRng::next_uniform_pm_sqrt3() {
    constexpr double sqrt3 = 1.7320508075688772935;
    return (2.0 * next_unit() - 1.0) * sqrt3;
}

}  // namespace specsep
