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
#include "specsep/mixture.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "specsep/errors.hpp"

namespace specsep {

AtomicMixture::AtomicMixture(std::vector<double> atoms, std::vector<double> weights) {
    if (atoms.size() != weights.size() || atoms.empty())
        throw std::invalid_argument("AtomicMixture: atoms/weights size mismatch or empty");
    double total = 0.0;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (!(atoms[i] >= 0.0) || !std::isfinite(atoms[i]))
            throw std::invalid_argument("AtomicMixture: atoms must be finite and >= 0");
        if (!(weights[i] > 0.0) || weights[i] > 1.0)
            throw std::invalid_argument("AtomicMixture: weights must lie in (0, 1]");
        total += weights[i];
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw std::invalid_argument("AtomicMixture: weights must sum to 1 within 1e-12");

    std::vector<std::size_t> order(atoms.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return atoms[a] > atoms[b]; });

    for (std::size_t idx : order) {
        if (!atoms_.empty() && atoms_.back() == atoms[idx]) {
            weights_.back() += weights[idx];  // merge exact duplicates
        } else {
            atoms_.push_back(atoms[idx]);
            weights_.push_back(weights[idx]);
        }
    }
    positive_count_ = 0;
    for (double a : atoms_)
        if (a > 0.0) ++positive_count_;
    if (positive_count_ == 0)
        throw std::invalid_argument("AtomicMixture: at least one atom must be positive");
}

double AtomicMixture::zero_mass() const {
    return (atoms_.back() == 0.0) ? weights_.back() : 0.0;
}

double AtomicMixture::second_moment() const {
    double m2 = 0.0;
    for (std::size_t j = 0; j < atoms_.size(); ++j) m2 += weights_[j] * atoms_[j] * atoms_[j];
    return m2;
}

BFactorSpec BFactorSpec::from_eigenvalues(std::vector<double> eigenvalues) {
    if (eigenvalues.empty())
        throw std::invalid_argument("BFactorSpec: empty eigenvalue list");
    for (double v : eigenvalues)
        if (!(v >= 0.0) || !std::isfinite(v))
            throw std::invalid_argument("BFactorSpec: eigenvalues must be finite and >= 0");
    BFactorSpec spec;
    spec.is_explicit_ = true;
    spec.eigenvalues_ = std::move(eigenvalues);
    return spec;
}

BFactorSpec BFactorSpec::from_moments(double b_bar, double b_bar2) {
    if (!(b_bar > 0.0))
        throw std::invalid_argument("BFactorSpec: b_bar must be positive");
    if (b_bar2 < b_bar * b_bar)
        throw std::invalid_argument("BFactorSpec: b_bar2 < b_bar^2 violates Cauchy-Schwarz");
    BFactorSpec spec;
    spec.moments_ = {b_bar, b_bar2};
    return spec;
}

SpectralMoments moments_of(const BFactorSpec& spec, int n) {
    if (n < 2) throw std::invalid_argument("moments_of: n must be >= 2");
    if (!spec.is_explicit()) return spec.stored_moments();
    const auto& eigs = spec.eigenvalues();
    if (static_cast<int>(eigs.size()) != n)
        throw std::invalid_argument("moments_of: eigenvalue list length differs from n");
    double s1 = 0.0, s2 = 0.0;
    for (double v : eigs) {
        s1 += v;
        s2 += v * v;
    }
    return {s1 / n, s2 / n};
}

std::vector<double> build_two_block_b(double b_bar0, double b_bar2_0, int n) {
    if (n <= 0 || n % 2 != 0)
        throw std::invalid_argument("build_two_block_b: n must be even and positive");
    const double disc = b_bar2_0 - b_bar0 * b_bar0;
    if (disc < 0.0)
        throw InfeasibleModelError("build_two_block_b: b_bar2 < b_bar^2 (negative discriminant)");
    const double root = std::sqrt(disc);
    const double beta1 = b_bar0 + root;
    const double beta2 = b_bar0 - root;
    if (beta2 < 0.0)
        throw InfeasibleModelError("build_two_block_b: lower block value is negative "
                                   "(requires b_bar2 <= 2 b_bar^2)");
    std::vector<double> eigs(n);
    std::fill(eigs.begin(), eigs.begin() + n / 2, beta1);
    std::fill(eigs.begin() + n / 2, eigs.end(), beta2);
    return eigs;
}

}  // namespace specsep
