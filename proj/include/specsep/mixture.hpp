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

#include <cstddef>
#include <vector>

namespace specsep {

/// Discrete spectral distribution of the spatial factor A: atoms a_j ≥ 0
/// with weights c_j summing to one. Stored sorted in strictly decreasing
/// atom order with exact duplicates merged; immutable after construction.
class AtomicMixture {
  public:
    /// Atom/weight pairs in any order. Throws std::invalid_argument if the
    /// weights do not sum to 1 within 1e-12, any weight is outside (0, 1],
    /// any atom is negative, or no atom is strictly positive.
    AtomicMixture(std::vector<double> atoms, std::vector<double> weights);

    const std::vector<double>& atoms() const { return atoms_; }
    const std::vector<double>& weights() const { return weights_; }
    std::size_t size() const { return atoms_.size(); }

    /// Number of strictly positive atoms.
    std::size_t positive_count() const { return positive_count_; }
    /// Weight of the atom at 0, or 0 if absent.
    double zero_mass() const;
    /// ∫ a² dF^A(a).
    double second_moment() const;

  private:
    std::vector<double> atoms_;    // strictly decreasing
    std::vector<double> weights_;  // aligned with atoms_
    std::size_t positive_count_;
};

/// First two limiting spectral moments of the temporal factor B:
/// b̄ = lim n⁻¹tr(B) and b̄₂ = lim n⁻¹tr(B²). Always b̄₂ ≥ b̄².
struct SpectralMoments {
    double b_bar;
    double b_bar2;
};

/// The temporal factor, given either by an explicit spectrum or by its
/// first two spectral moments.
class BFactorSpec {
  public:
    static BFactorSpec from_eigenvalues(std::vector<double> eigenvalues);
    static BFactorSpec from_moments(double b_bar, double b_bar2);

    bool is_explicit() const { return is_explicit_; }
    const std::vector<double>& eigenvalues() const { return eigenvalues_; }
    SpectralMoments stored_moments() const { return moments_; }

  private:
    BFactorSpec() = default;
    bool is_explicit_ = false;
    std::vector<double> eigenvalues_;
    SpectralMoments moments_{0.0, 0.0};
};

/// Spectral moments of the realized n×n factor: (n⁻¹Σλ, n⁻¹Σλ²) for the
/// explicit form, the stored pair otherwise. Throws std::invalid_argument
/// for a length mismatch or n < 2.
SpectralMoments moments_of(const BFactorSpec& spec, int n);

/// Two-block spectrum with the exact moments (b̄⁰, b̄₂⁰): n/2 copies of
/// β₁ = b̄⁰ + √(b̄₂⁰ − (b̄⁰)²) followed by n/2 copies of β₂ = b̄⁰ − √(...).
/// Throws InfeasibleModelError when β₂ < 0 or the discriminant is negative,
/// std::invalid_argument for odd n.
std::vector<double> build_two_block_b(double b_bar0, double b_bar2_0, int n);

}  // namespace specsep
