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
#include "specsep/poly_roots.hpp"

#include <cmath>
#include <stdexcept>

namespace specsep {

using cplx = std::complex<double>;

void poly_eval(const std::vector<cplx>& coeffs, cplx z, cplx& value, cplx& deriv) {
    value = coeffs.back();
    deriv = 0.0;
    for (int k = static_cast<int>(coeffs.size()) - 2; k >= 0; --k) {
        deriv = deriv * z + value;
        value = value * z + coeffs[k];
    }
}

namespace {

std::vector<cplx> quadratic_roots(const cplx a, const cplx b, const cplx c) {
    // Numerically stable variant: q = -(b + sign·sqrt(b² - 4ac))/2,
    // roots q/a and c/q.
    cplx s = std::sqrt(b * b - 4.0 * a * c);
    if ((std::conj(b) * s).real() < 0.0) s = -s;
    const cplx q = -0.5 * (b + s);
    if (std::abs(q) == 0.0) return {cplx(0.0), -b / a};
    return {q / a, c / q};
}

std::vector<cplx> aberth_roots(const std::vector<cplx>& coeffs) {
    const int n = static_cast<int>(coeffs.size()) - 1;
    // Starting points on a circle of the root-magnitude scale, with an
    // angular offset so that conjugate symmetry cannot trap the iteration.
    double radius = std::pow(std::abs(coeffs[0] / coeffs[n]), 1.0 / n);
    if (!(radius > 0.0) || !std::isfinite(radius)) radius = 1.0;
    std::vector<cplx> z(n);
    for (int k = 0; k < n; ++k) {
        const double theta = 2.0 * M_PI * k / n + 0.7 / n + 0.3;
        z[k] = radius * cplx(std::cos(theta), std::sin(theta));
    }

    std::vector<cplx> w(n);
    for (int iter = 0; iter < 200; ++iter) {
        double max_step = 0.0;
        for (int i = 0; i < n; ++i) {
            cplx p, dp;
            poly_eval(coeffs, z[i], p, dp);
            if (std::abs(p) == 0.0) {
                w[i] = 0.0;
                continue;
            }
            cplx newton = (dp != cplx(0.0)) ? p / dp : cplx(1e-3, 1e-3);
            cplx sum = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                const cplx diff = z[i] - z[j];
                if (std::abs(diff) > 1e-300) sum += 1.0 / diff;
            }
            const cplx denom = 1.0 - newton * sum;
            w[i] = (std::abs(denom) > 1e-300) ? newton / denom : newton;
        }
        for (int i = 0; i < n; ++i) {
            z[i] -= w[i];
            max_step = std::max(max_step, std::abs(w[i]) / (1.0 + std::abs(z[i])));
        }
        if (max_step < 1e-14) break;
    }

    // Newton finish per root.
    for (int i = 0; i < n; ++i) {
        for (int step = 0; step < 4; ++step) {
            cplx p, dp;
            poly_eval(coeffs, z[i], p, dp);
            if (std::abs(dp) < 1e-300) break;
            const cplx delta = p / dp;
            z[i] -= delta;
            if (std::abs(delta) < 1e-15 * (1.0 + std::abs(z[i]))) break;
        }
    }
    return z;
}

}  // namespace

std::vector<cplx> polynomial_roots(std::vector<cplx> coeffs) {
    double max_mag = 0.0;
    for (const cplx& c : coeffs) max_mag = std::max(max_mag, std::abs(c));
    if (max_mag == 0.0) throw std::invalid_argument("polynomial_roots: zero polynomial");

    while (coeffs.size() > 1 && std::abs(coeffs.back()) <= 1e-14 * max_mag) coeffs.pop_back();

    std::vector<cplx> roots;
    while (coeffs.size() > 1 && std::abs(coeffs.front()) == 0.0) {
        roots.emplace_back(0.0);
        coeffs.erase(coeffs.begin());
    }

    const int n = static_cast<int>(coeffs.size()) - 1;
    if (n == 0) return roots;
    if (n == 1) {
        roots.push_back(-coeffs[0] / coeffs[1]);
        return roots;
    }
    std::vector<cplx> found =
        (n == 2) ? quadratic_roots(coeffs[2], coeffs[1], coeffs[0]) : aberth_roots(coeffs);
    roots.insert(roots.end(), found.begin(), found.end());
    return roots;
}

}  // namespace specsep
