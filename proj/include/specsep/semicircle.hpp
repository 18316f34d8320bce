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

#include <vector>

#include "specsep/mixture.hpp"

namespace specsep {

/// Semicircle law scaled to support [-2σ, 2σ].
struct ScaledSemicircle {
    double sigma;
};

/// Closed-form semicircle CDF: ½ + x√(4σ²−x²)/(4πσ²) + arcsin(x/2σ)/π on
/// the support, 0/1 outside.
double sc_cdf(const ScaledSemicircle& law, double x);

/// Semicircle density √(4σ²−x²)/(2πσ²) on the support, 0 outside.
double sc_density(const ScaledSemicircle& law, double x);

/// Limit law of the rank-aligned eigenvalue fluctuations of the sample
/// covariance matrix: Σ_j c_j·F_sc(x; √(b̄₂ c_j)·α_j). A component with
/// α_j = 0 degenerates to a point mass at 0.
class FluctuationMixture {
  public:
    struct Component {
        double weight;
        double sigma;  // √(b̄₂ c_j)·α_j, 0 for degenerate components
    };

    FluctuationMixture(const AtomicMixture& mix, double b_bar2);

    const std::vector<Component>& components() const { return components_; }

  private:
    std::vector<Component> components_;
};

double mixture_cdf(const FluctuationMixture& law, double x);

/// Kolmogorov distance sup |F̂ − F| between a sorted sample's step CDF and
/// the mixture law (the candidate set includes both one-sided limits at
/// every sample point and at the possible atom at 0).
double ks_distance(const std::vector<double>& sorted_sample, const FluctuationMixture& law);

}  // namespace specsep
