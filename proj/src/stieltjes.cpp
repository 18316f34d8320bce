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
#include "specsep/stieltjes.hpp"

#include <cmath>
#include <stdexcept>

#include "specsep/errors.hpp"

namespace specsep {

using cplx = std::complex<double>;

namespace {

constexpr double kStepTol = 1e-13;
constexpr double kResidualTol = 1e-12;
constexpr int kMaxIterations = 10000;

cplx beta_map(const AtomicMixture& mix, double b2, cplx z, cplx beta) {
    cplx acc = 0.0;
    for (std::size_t j = 0; j < mix.size(); ++j) {
        const double a = mix.atoms()[j];
        if (a == 0.0) continue;
        acc += mix.weights()[j] * a / (z + b2 * a * beta);
    }
    return -acc;
}

double map_residual(const AtomicMixture& mix, double b2, cplx z, cplx beta) {
    return std::abs(beta - beta_map(mix, b2, z, beta));
}

// One damped pass: β ← (1-η)β + η·map(β). Returns true on |Δβ| < tol.
bool iterate(const AtomicMixture& mix, double b2, cplx z, cplx& beta, double eta, int max_iter,
             int& used) {
    for (int k = 0; k < max_iter; ++k) {
        const cplx next = (1.0 - eta) * beta + eta * beta_map(mix, b2, z, beta);
        const double step = std::abs(next - beta);
        beta = next;
        ++used;
        if (step < kStepTol) return true;
    }
    return false;
}

// Newton polish on h(β) = β + Σ c_j a_j/(z + b2 a_j β); keeps β in ℂ⁺.
void newton_polish(const AtomicMixture& mix, double b2, cplx z, cplx& beta) {
    for (int k = 0; k < 60; ++k) {
        cplx h = beta, dh = 1.0;
        for (std::size_t j = 0; j < mix.size(); ++j) {
            const double a = mix.atoms()[j];
            if (a == 0.0) continue;
            const cplx denom = z + b2 * a * beta;
            const cplx term = mix.weights()[j] * a / denom;
            h += term;
            dh -= term * b2 * a / denom;
        }
        if (std::abs(dh) < 1e-300) return;
        cplx delta = h / dh;
        // Halve the step rather than leave the half plane.
        for (int half = 0; half < 40 && (beta - delta).imag() <= 0.0; ++half) delta *= 0.5;
        beta -= delta;
        if (std::abs(delta) < 1e-16 * (1.0 + std::abs(beta))) return;
    }
}

}  // namespace

StieltjesPair solve_system(const AtomicMixture& mix, double b_bar2, cplx z, cplx beta0) {
    if (!(z.imag() > 0.0)) throw std::invalid_argument("solve_system: Im z must be positive");
    if (!(b_bar2 > 0.0)) throw std::invalid_argument("solve_system: b_bar2 must be positive");

    cplx beta = (beta0.imag() > 0.0) ? beta0 : cplx(0.0, 1.0);
    int used = 0;
    bool converged = iterate(mix, b_bar2, z, beta, 1.0, kMaxIterations, used);
    if (!converged) {
        for (double eta = 0.5; eta >= 1.0 / 64.0 && !converged; eta *= 0.5)
            converged = iterate(mix, b_bar2, z, beta, eta, kMaxIterations, used);
        newton_polish(mix, b_bar2, z, beta);
    }
    if (map_residual(mix, b_bar2, z, beta) > kResidualTol) newton_polish(mix, b_bar2, z, beta);

    const double residual = map_residual(mix, b_bar2, z, beta);
    if (residual > kResidualTol)
        throw NumericalError("solve_system: residual " + std::to_string(residual) +
                             " above 1e-12 after damping and polish");

    cplx s = 0.0;
    for (std::size_t j = 0; j < mix.size(); ++j)
        s -= mix.weights()[j] / (z + b_bar2 * mix.atoms()[j] * beta);
    return {z, s, beta, used, residual};
}

double density_inversion(const AtomicMixture& mix, double b_bar2, double x,
                         const std::vector<double>& eps_ladder) {
    if (eps_ladder.empty())
        throw std::invalid_argument("density_inversion: empty epsilon ladder");
    if (x == 0.0) throw std::invalid_argument("density_inversion: x must be nonzero");

    const std::size_t k = eps_ladder.size();
    std::vector<double> value(k);
    cplx warm(0.0, 1.0);
    for (std::size_t i = 0; i < k; ++i) {
        const StieltjesPair pair = solve_system(mix, b_bar2, {x, eps_ladder[i]}, warm);
        warm = pair.beta;
        value[i] = pair.s.imag() / M_PI;
    }
    // Neville extrapolation of (ε_i, value_i) to ε = 0.
    std::vector<double> table = value;
    for (std::size_t j = 1; j < k; ++j)
        for (std::size_t i = k - 1; i >= j; --i)
            table[i] = table[i] + (table[i] - table[i - 1]) * eps_ladder[i] /
                                      (eps_ladder[i - j] - eps_ladder[i]);
    return std::max(0.0, table[k - 1]);
}

}  // namespace specsep
