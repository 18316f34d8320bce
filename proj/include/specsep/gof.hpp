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
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "specsep/lsd.hpp"
#include "specsep/mixture.hpp"
#include "specsep/randmat.hpp"

namespace specsep {

/// Probability levels reported for null quantile tables.
inline constexpr std::array<double, 15> kQuantileLadder = {
    0.01, 0.02, 0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.98, 0.99};

/// L² statistic ∫ |F̂(x) − F(x)|² dx over [min(support, sample) − 1,
/// max(support, sample) + 1]. Trapezoid with the step halved (from 1e-3)
/// until one halving changes the value by less than 1e-6.
double l2_statistic(const EmpiricalDistribution& esd, const LsdCurve& lsd);

/// Cramér-von-Mises-type statistic ∫ |F̂ − F|² dF: the density-weighted
/// integral over the support intervals on the curve grid, plus the atom
/// contribution |F̂(0) − F(0)|²·F({0}) with the right-limit convention.
double cvm_statistic(const EmpiricalDistribution& esd, const LsdCurve& lsd);

/// Linear-interpolation (type 7) sample quantile of a sorted sample.
double sample_quantile(const std::vector<double>& sorted, double prob);

/// Order-statistic quantile pairs (q_null(p), q_alt(p)) for each probability.
std::vector<std::pair<double, double>> qq_data(const std::vector<double>& null_sorted,
                                               const std::vector<double>& alt_sorted,
                                               const std::vector<double>& probs);

/// Monte-Carlo sample of the null statistic: B₀ realized as the two-block
/// spectrum for (b̄⁰, b̄₂⁰), `replicates` Gaussian draws of the renormalized
/// matrix, each scored by l2_statistic against the LSD of (A₀, b̄₂⁰).
struct NullDistribution {
    std::vector<double> values;  // sorted ascending
    std::map<double, double> quantiles;
    int replicates = 0;
    std::uint64_t seed = 0;
};

/// Parameters shared by the Monte-Carlo routines. The LSD curve is built
/// once on [-grid_half, grid_half] with the given step unless a prebuilt
/// curve is supplied.
struct NullSpec {
    AtomicMixture a0;
    double b_bar0;
    double b_bar2_0;
    int p;
    int n;
};

/// Default half-width of the LSD grid for the mixture's scale.
double default_grid_half(const AtomicMixture& mix, double b_bar2);

LsdCurve build_null_curve(const AtomicMixture& a0, double b_bar2_0, double step = 5e-4);

NullDistribution monte_carlo_null(const NullSpec& spec, int replicates, std::uint64_t seed,
                                  int threads = 1, const LsdCurve* curve = nullptr);

/// Full test report for one observed spectrum.
struct TestReport {
    double statistic = 0.0;
    std::map<double, double> null_quantiles;
    double p_value = 1.0;  // add-one estimator (1 + #{null ≥ obs})/(reps + 1)
    int replicates = 0;
    std::uint64_t seed = 0;
};

TestReport run_test(const EmpiricalDistribution& observed, const NullSpec& spec, int replicates,
                    std::uint64_t seed, int threads = 1, const LsdCurve* curve = nullptr);

/// p-value of `statistic` against an already computed null sample.
double p_value_against(const NullDistribution& null_dist, double statistic);

}  // namespace specsep
