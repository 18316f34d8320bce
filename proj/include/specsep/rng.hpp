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
#pragma once

#include <array>
#include <complex>
#include <cstdint>

namespace specsep {

// Counter-based PRNG, Philox4x32-10.
// Salmon et al., SC 2011. Parallel random numbers: as easy as 1, 2, 3.
//   http://www.thesalmons.org/john/random123/papers/random123sc11.pdf
//
// Each (seed, stream) pair is an independent stream, so per-replicate
// streams keyed by (seed, replicate index) give results that do not depend
// on how replicates are assigned to worker threads.
class PhiloxRng {
  public:
    PhiloxRng(std::uint64_t seed, std::uint64_t stream);

    std::uint32_t next_u32();
    std::uint64_t next_u64();

    /// Uniform on [0, 1), 53-bit resolution.
    double next_unit();
    /// Uniform on (0, 1]; safe as a log() argument.
    double next_unit_open();
    /// Standard normal via Box-Muller (second value cached).
    double next_gaussian();
    /// Complex standard normal: independent N(0, 1/2) real and imaginary parts.
    std::complex<double> next_complex_gaussian();
    /// ±1 with probability 1/2 each.
    double next_rademacher();
    /// Uniform on [-√3, √3] (mean 0, variance 1).
    double next_uniform_pm_sqrt3();

  private:
    void refill();

    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 2> stream_;
    std::uint64_t block_ = 0;
    std::array<std::uint32_t, 4> buf_{};
    int buf_pos_ = 4;
    double gauss_cache_ = 0.0;
    bool has_gauss_ = false;
};

}  // namespace specsep
