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
#include <optional>
#include <string>
#include <vector>

#include "specsep/mixture.hpp"

namespace specsep {

// Admissibility tolerances for the branch-selection constraints
// Im β ≥ -τ_im, x·Re β < τ_re, ω ≤ 1 + τ_ω. They sit well above the
// 1e-10-class residual of the polished roots.
inline constexpr double kTauIm = 1e-9;
inline constexpr double kTauRe = 1e-12;
inline constexpr double kTauOmega = 1e-7;

/// Selected boundary value β(x) of the companion transform at one real
/// x ≠ 0. `admissible` is true on the support (Im β > τ_im and all
/// constraints met); outside, beta is the real branch with ω closest to
/// its boundary value 1.
struct BetaSolution {
    double x;
    std::complex<double> beta;
    double omega;
    bool admissible;
    double b_bar2;  // scale the solution was computed at; density needs it
};

/// Coefficients (ascending degree, m⁺+2 entries) of
///   P(β) = β·Π_{a_j>0}(x + b̄₂ a_j β) + Σ_{a_j>0} c_j a_j Π_{k≠j}(x + b̄₂ a_k β),
/// whose roots are the candidates for β(x). Atoms at zero drop out. Built
/// by convolution of the linear factors for any atom count.
std::vector<std::complex<double>> beta_polynomial(const AtomicMixture& mix, double b_bar2,
                                                  double x);

/// Constraint functional ω(x) = Σ_j c_j b̄₂ a_j²/|x + b̄₂ a_j β|². Equals 1
/// on the support. Returns +inf if a denominator vanishes (defective root;
/// callers discard it).
double omega(const AtomicMixture& mix, double b_bar2, double x, std::complex<double> beta);

/// Root search for β(x): all polynomial roots, Newton-polished on the
/// rational equation, filtered by the admissibility constraints. Among
/// in-support candidates the one nearest `hint` wins (continuity), or the
/// one with largest Im β without a hint. With no in-support root the real
/// branch minimizing |ω - 1| is returned with admissible = false.
BetaSolution solve_beta(const AtomicMixture& mix, double b_bar2, double x,
                        std::optional<std::complex<double>> hint = std::nullopt);

/// Density f(x) = max(0, -2 b̄₂ Re(β) Im(β) / (π x)); exactly 0 off-support.
double density_at(const BetaSolution& sol);

/// Support interval [lo, hi].
struct Interval {
    double lo;
    double hi;
};

/// LSD sampled on a symmetric-style grid that excludes (-origin_gap,
/// origin_gap): selected β, density, ω per grid point, detected support
/// intervals with bisection-refined endpoints, the point mass at 0, and the
/// cumulative density integral used by cdf().
struct LsdCurve {
    std::vector<double> grid;
    std::vector<std::complex<double>> beta;
    std::vector<double> density;
    std::vector<double> omega;
    std::vector<Interval> support;
    double atom_at_zero = 0.0;
    double b_bar2 = 1.0;
    std::vector<double> cumulative;  // trapezoid of density up to grid[i]
    std::vector<std::string> warnings;
};

/// Sweep outward from ±origin_gap on each side, threading the previous β as
/// the continuity hint; detect support runs where Im β > τ_im and refine
/// each endpoint by bisection to step/100. Requires
/// x_min < -origin_gap < origin_gap < x_max and step > 0.
LsdCurve build_curve(const AtomicMixture& mix, double b_bar2, double x_min, double x_max,
                     double step, double origin_gap = 1e-3);

/// CDF of the curve: cumulative trapezoid of the density from the left grid
/// edge, plus the atom at 0 for x ≥ 0, clamped to [0, 1].
double cdf(const LsdCurve& curve, double x);

/// atom_at_zero + full trapezoid mass (should be 1 within the grid budget).
double total_mass(const LsdCurve& curve);

}  // namespace specsep
