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
#include <vector>

#include "specsep/mixture.hpp"

namespace specsep {

/// Solution of the coupled transform system at one point of the upper half
/// plane: s(z) = -Σ c_j/(z + b̄₂ a_j β(z)), β(z) = -Σ c_j a_j/(z + b̄₂ a_j β(z)).
struct StieltjesPair {
    std::complex<double> z;
    std::complex<double> s;
    std::complex<double> beta;
    int iterations;
    double residual;  // |β + Σ c_j a_j/(z + b̄₂ a_j β)|
};

/// Fixed-point solve of the system on ℂ⁺ (the β map is a contraction there),
/// starting from beta0. If the plain iteration stalls, damped passes with
/// halving step are tried and a Newton polish restores full residual
/// accuracy. Throws NumericalError if the final residual exceeds 1e-12,
/// std::invalid_argument if Im z <= 0.
StieltjesPair solve_system(const AtomicMixture& mix, double b_bar2, std::complex<double> z,
                           std::complex<double> beta0 = {0.0, 1.0});

/// Density oracle by Stieltjes inversion: Richardson (Neville) extrapolation
/// of Im s(x + iε)/π to ε → 0 along a decreasing ladder.
double density_inversion(const AtomicMixture& mix, double b_bar2, double x,
                         const std::vector<double>& eps_ladder = {1e-2, 1e-3, 1e-4});

}  // namespace specsep
