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

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "specsep/mixture.hpp"

namespace specsep {

/// Entry distribution for the p×n noise matrix X; all have mean 0 and
/// variance 1 (the complex law has independent N(0, 1/2) parts).
enum class EntryLaw { kStandardGaussian, kRademacher, kUniformPmSqrt3, kComplexGaussian };

EntryLaw entry_law_from_string(const std::string& name);
std::string to_string(EntryLaw law);

/// Realized finite-size model: diagonal spatial factor of size p (atom
/// multiplicities by largest-remainder apportionment of c_j·p, eigenvalues
/// descending), diagonal temporal factor of size n, entry law and base seed.
/// Replicate r draws X from the counter-based stream (seed, r), so results
/// are independent of worker-thread scheduling.
struct SampledModel {
    std::vector<double> a_eigs;  // p entries, descending
    std::vector<double> b_eigs;  // n entries
    EntryLaw law = EntryLaw::kStandardGaussian;
    std::uint64_t seed = 0;

    int p() const { return static_cast<int>(a_eigs.size()); }
    int n() const { return static_cast<int>(b_eigs.size()); }
    double b_bar_n() const;  // n⁻¹ tr(B)
};

/// Build the realized model from the mixture and the B factor spec.
/// Requires 2 ≤ p ≤ n; explicit B spectra must have length n.
SampledModel make_model(const AtomicMixture& mix, const BFactorSpec& bspec, int p, int n,
                        EntryLaw law, std::uint64_t seed);

/// Largest-remainder apportionment of weights·p into integer multiplicities
/// summing to p (ties resolved by lower index).
std::vector<int> apportion_multiplicities(const std::vector<double>& weights, int p);

/// Sorted real sample defining a step CDF.
struct EmpiricalDistribution {
    std::vector<double> samples;  // ascending

    explicit EmpiricalDistribution(std::vector<double> values);
    double cdf(double x) const;
};

/// Step-function CDF (#samples ≤ x)/count by binary search.
double esd_cdf(const EmpiricalDistribution& ed, double x);

/// Eigenvalues of the renormalized covariance
///   C_n = √(n/p)·(n⁻¹ A^{1/2} X B X* A^{1/2} − n⁻¹tr(B)·A)
/// for replicate `replicate`, as an empirical distribution.
EmpiricalDistribution sample_c_n(const SampledModel& model, std::uint64_t replicate = 0);

/// Eigenvalues of the sample covariance S_n = n⁻¹ A^{1/2} X B X* A^{1/2},
/// descending.
std::vector<double> sample_s_n_eigs(const SampledModel& model, std::uint64_t replicate = 0);

/// Rank-aligned eigenvalue fluctuations
///   {√(n/p)·(λ_j(S_n) − n⁻¹tr(B)·a_j)}_{j=1..p}
/// with both spectra in decreasing order.
EmpiricalDistribution fluctuation_sample(const SampledModel& model, std::uint64_t replicate = 0);

// Deterministic-X hooks (tests inject explicit matrices; row-major p×n).
std::vector<double> c_eigenvalues_from_x(const SampledModel& model,
                                         const std::vector<double>& x);
std::vector<double> s_eigenvalues_from_x(const SampledModel& model,
                                         const std::vector<double>& x);
std::vector<double> c_eigenvalues_from_x(const SampledModel& model,
                                         const std::vector<std::complex<double>>& x);

/// The replicate's noise matrix (row-major p×n), real laws only.
std::vector<double> draw_x(const SampledModel& model, std::uint64_t replicate);

/// Observed spectrum for the test procedure: eigenvalues of
///   √(n/p)·(n⁻¹ Y Y* − b̄⁰·A₀)
/// where Y is drawn under `data_model` but the recentering uses the
/// hypothesized spectrum a0_eigs (descending, length p) and trace b̄⁰.
std::vector<double> null_centered_eigs(const SampledModel& data_model,
                                       const std::vector<double>& a0_eigs, double b_bar0,
                                       std::uint64_t replicate = 0);

}  // namespace specsep
