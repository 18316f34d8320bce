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
#include "specsep/semicircle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace specsep {

double sc_cdf(const ScaledSemicircle& law, double x) {
    if (!(law.sigma > 0.0)) throw std::invalid_argument("sc_cdf: sigma must be positive");
    const double s = law.sigma;
    if (x <= -2.0 * s) return 0.0;
    if (x >= 2.0 * s) return 1.0;
    const double s2 = s * s;
    return 0.5 + x * std::sqrt(4.0 * s2 - x * x) / (4.0 * M_PI * s2) +
           std::asin(x / (2.0 * s)) / M_PI;
}

double sc_density(const ScaledSemicircle& law, double x) {
    if (!(law.sigma > 0.0)) throw std::invalid_argument("sc_density: sigma must be positive");
    const double s2 = law.sigma * law.sigma;
    const double disc = 4.0 * s2 - x * x;
    return (disc > 0.0) ? std::sqrt(disc) / (2.0 * M_PI * s2) : 0.0;
}

FluctuationMixture::FluctuationMixture(const AtomicMixture& mix, double b_bar2) {
    if (!(b_bar2 > 0.0))
        throw std::invalid_argument("FluctuationMixture: b_bar2 must be positive");
    components_.reserve(mix.size());
    for (std::size_t j = 0; j < mix.size(); ++j) {
        const double c = mix.weights()[j];
        components_.push_back({c, std::sqrt(b_bar2 * c) * mix.atoms()[j]});
    }
}

double mixture_cdf(const FluctuationMixture& law, double x) {
    double acc = 0.0;
    for (const auto& comp : law.components()) {
        if (comp.sigma > 0.0)
            acc += comp.weight * sc_cdf({comp.sigma}, x);
        else if (x >= 0.0)
            acc += comp.weight;
    }
    return acc;
}

double ks_distance(const std::vector<double>& sorted_sample, const FluctuationMixture& law) {
    const double count = static_cast<double>(sorted_sample.size());
    double dist = 0.0;
    for (std::size_t i = 0; i < sorted_sample.size(); ++i) {
        const double f = mixture_cdf(law, sorted_sample[i]);
        dist = std::max(dist, std::abs(static_cast<double>(i + 1) / count - f));
        dist = std::max(dist, std::abs(static_cast<double>(i) / count - f));
    }
    // An atom at 0 makes the law discontinuous there; check both sides.
    bool has_atom = false;
    for (const auto& comp : law.components())
        if (comp.sigma == 0.0) has_atom = true;
    if (has_atom) {
        const auto below = std::lower_bound(sorted_sample.begin(), sorted_sample.end(), 0.0);
        const double f_hat_left = static_cast<double>(below - sorted_sample.begin()) / count;
        double f_left = 0.0;
        for (const auto& comp : law.components())
            if (comp.sigma > 0.0) f_left += comp.weight * sc_cdf({comp.sigma}, 0.0);
        dist = std::max(dist, std::abs(f_hat_left - f_left));
    }
    return dist;
}

}  // namespace specsep
