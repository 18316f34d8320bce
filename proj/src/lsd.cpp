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
#include "specsep/lsd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "specsep/poly_roots.hpp"

namespace specsep {

using cplx = std::complex<double>;

namespace {

// h(β) = β + Σ c_j a_j/(x + b2 a_j β); the defining rational equation.
cplx rational_residual(const AtomicMixture& mix, double b2, double x, cplx beta) {
    cplx h = beta;
    for (std::size_t j = 0; j < mix.size(); ++j) {
        const double a = mix.atoms()[j];
        if (a == 0.0) continue;
        h += mix.weights()[j] * a / (x + b2 * a * beta);
    }
    return h;
}

// Newton on the rational equation; polynomial roots land close enough that
// a handful of steps reach residuals near machine precision.
cplx polish_root(const AtomicMixture& mix, double b2, double x, cplx beta) {
    cplx best = beta;
    double best_res = std::abs(rational_residual(mix, b2, x, beta));
    for (int k = 0; k < 24; ++k) {
        cplx h = beta, dh = 1.0;
        bool defective = false;
        for (std::size_t j = 0; j < mix.size(); ++j) {
            const double a = mix.atoms()[j];
            if (a == 0.0) continue;
            const cplx denom = x + b2 * a * beta;
            if (std::abs(denom) < 1e-280) {
                defective = true;
                break;
            }
            const cplx term = mix.weights()[j] * a / denom;
            h += term;
            dh -= term * b2 * a / denom;
        }
        if (defective || std::abs(dh) < 1e-300) break;
        const cplx delta = h / dh;
        beta -= delta;
        const double res = std::abs(rational_residual(mix, b2, x, beta));
        if (res < best_res) {
            best = beta;
            best_res = res;
        }
        if (std::abs(delta) < 1e-16 * (1.0 + std::abs(beta))) break;
    }
    return best;
}

// Multiply the polynomial by the linear factor (c0 + c1 β) in place.
void mul_linear(std::vector<double>& poly, double c0, double c1) {
    poly.push_back(0.0);
    for (std::size_t k = poly.size() - 1; k >= 1; --k)
        poly[k] = poly[k] * c0 + poly[k - 1] * c1;
    poly[0] *= c0;
}

}  // namespace

std::vector<cplx> beta_polynomial(const AtomicMixture& mix, double b_bar2, double x) {
    if (x == 0.0) throw std::invalid_argument("beta_polynomial: x must be nonzero");

    // β·Q(β) with Q = Π (x + b2 a_j β) over positive atoms.
    std::vector<double> q{1.0};
    for (std::size_t j = 0; j < mix.size(); ++j)
        if (mix.atoms()[j] > 0.0) mul_linear(q, x, b_bar2 * mix.atoms()[j]);

    std::vector<double> p(q.size() + 1, 0.0);
    for (std::size_t k = 0; k < q.size(); ++k) p[k + 1] = q[k];

    // Σ c_j a_j Π_{k≠j} (x + b2 a_k β).
    for (std::size_t j = 0; j < mix.size(); ++j) {
        const double aj = mix.atoms()[j];
        if (aj == 0.0) continue;
        std::vector<double> qj{mix.weights()[j] * aj};
        for (std::size_t k = 0; k < mix.size(); ++k) {
            if (k == j || mix.atoms()[k] == 0.0) continue;
            mul_linear(qj, x, b_bar2 * mix.atoms()[k]);
        }
        for (std::size_t k = 0; k < qj.size(); ++k) p[k] += qj[k];
    }

    return std::vector<cplx>(p.begin(), p.end());
}

double omega(const AtomicMixture& mix, double b_bar2, double x, cplx beta) {
    double acc = 0.0;
    for (std::size_t j = 0; j < mix.size(); ++j) {
        const double a = mix.atoms()[j];
        if (a == 0.0) continue;
        const double denom = std::norm(x + b_bar2 * a * beta);
        if (denom < 1e-280) return std::numeric_limits<double>::infinity();
        acc += mix.weights()[j] * b_bar2 * a * a / denom;
    }
    return acc;
}

BetaSolution solve_beta(const AtomicMixture& mix, double b_bar2, double x,
                        std::optional<cplx> hint) {
    if (x == 0.0) throw std::invalid_argument("solve_beta: x must be nonzero");

    std::vector<cplx> roots = polynomial_roots(beta_polynomial(mix, b_bar2, x));
    for (cplx& r : roots) r = polish_root(mix, b_bar2, x, r);

    struct Candidate {
        cplx beta;
        double om;
    };
    std::vector<Candidate> in_support;   // Im β > τ_im
    std::vector<Candidate> off_support;  // |Im β| ≤ τ_im, constraints met
    for (const cplx& r : roots) {
        const double om = omega(mix, b_bar2, x, r);
        const bool constraints_ok =
            r.imag() >= -kTauIm && x * r.real() < kTauRe && om <= 1.0 + kTauOmega;
        if (!constraints_ok) continue;
        if (r.imag() > kTauIm)
            in_support.push_back({r, om});
        else
            off_support.push_back({r, om});
    }

    if (!in_support.empty()) {
        const Candidate* pick = &in_support.front();
        if (hint) {
            for (const Candidate& c : in_support)
                if (std::abs(c.beta - *hint) < std::abs(pick->beta - *hint)) pick = &c;
        } else {
            for (const Candidate& c : in_support)
                if (c.beta.imag() > pick->beta.imag()) pick = &c;
        }
        return {x, pick->beta, pick->om, true, b_bar2};
    }

    // Outside the support: the real branch with ω nearest its boundary value.
    if (!off_support.empty()) {
        const Candidate* pick = &off_support.front();
        for (const Candidate& c : off_support)
            if (std::abs(c.om - 1.0) < std::abs(pick->om - 1.0)) pick = &c;
        return {x, pick->beta, pick->om, false, b_bar2};
    }

    // No root met the constraints (can only happen on pathological grids);
    // fall back to the real-ish root of correct sign closest to ω = 1.
    const cplx* fallback = nullptr;
    double fallback_score = std::numeric_limits<double>::infinity();
    for (const cplx& r : roots) {
        if (x * r.real() >= kTauRe) continue;
        const double score = std::abs(omega(mix, b_bar2, x, r) - 1.0) + std::abs(r.imag());
        if (score < fallback_score) {
            fallback_score = score;
            fallback = &r;
        }
    }
    if (!fallback) fallback = &roots.front();
    return {x, *fallback, omega(mix, b_bar2, x, *fallback), false, b_bar2};
}

double density_at(const BetaSolution& sol) {
    if (!sol.admissible) return 0.0;
    const double value =
        -2.0 * sol.b_bar2 * sol.beta.real() * sol.beta.imag() / (M_PI * sol.x);
    return std::max(0.0, value);
}

namespace {

// Bisection on the Im β > τ_im crossing between an off-support abscissa and
// an in-support one; the in-support β threads as the hint.
double refine_edge(const AtomicMixture& mix, double b2, double x_out, double x_in, cplx hint,
                   double tol) {
    while (std::abs(x_in - x_out) > tol) {
        const double mid = 0.5 * (x_in + x_out);
        const BetaSolution sol = solve_beta(mix, b2, mid, hint);
        if (sol.admissible) {
            x_in = mid;
            hint = sol.beta;
        } else {
            x_out = mid;
        }
    }
    return 0.5 * (x_in + x_out);
}

}  // namespace

LsdCurve build_curve(const AtomicMixture& mix, double b_bar2, double x_min, double x_max,
                     double step, double origin_gap) {
    if (!(step > 0.0) || !(origin_gap > 0.0))
        throw std::invalid_argument("build_curve: step and origin_gap must be positive");
    if (!(x_min < -origin_gap) || !(origin_gap < x_max))
        throw std::invalid_argument("build_curve: need x_min < -origin_gap < origin_gap < x_max");

    // Each side is swept outward from ±origin_gap with the continuity hint.
    std::vector<double> pos_x, neg_x;
    for (double x = origin_gap; x <= x_max + 0.5 * step; x += step)
        pos_x.push_back(std::min(x, x_max));
    for (double x = -origin_gap; x >= x_min - 0.5 * step; x -= step)
        neg_x.push_back(std::max(x, x_min));

    const auto sweep = [&](const std::vector<double>& xs) {
        std::vector<BetaSolution> out;
        out.reserve(xs.size());
        std::optional<cplx> hint;
        for (double x : xs) {
            BetaSolution sol = solve_beta(mix, b_bar2, x, hint);
            hint = sol.beta;
            out.push_back(sol);
        }
        return out;
    };
    const std::vector<BetaSolution> pos = sweep(pos_x);
    std::vector<BetaSolution> all = sweep(neg_x);
    std::reverse(all.begin(), all.end());
    all.insert(all.end(), pos.begin(), pos.end());

    LsdCurve curve;
    curve.b_bar2 = b_bar2;
    curve.atom_at_zero = mix.zero_mass();
    const std::size_t total = all.size();
    curve.grid.reserve(total);
    curve.beta.reserve(total);
    curve.density.reserve(total);
    curve.omega.reserve(total);
    std::vector<bool> inside(total);
    std::size_t idx = 0;
    for (const BetaSolution& sol : all) {
        curve.grid.push_back(sol.x);
        curve.beta.push_back(sol.beta);
        curve.density.push_back(density_at(sol));
        curve.omega.push_back(sol.omega);
        inside[idx++] = sol.admissible;
    }

    // Maximal in-support runs; the cell straddling the origin gap joins the
    // two sides when both innermost points are in-support.
    const double tol = step / 100.0;
    std::size_t i = 0;
    while (i < total) {
        if (!inside[i]) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < total && inside[j + 1]) ++j;
        Interval iv{curve.grid[i], curve.grid[j]};
        if (i > 0)
            iv.lo = refine_edge(mix, b_bar2, curve.grid[i - 1], curve.grid[i], curve.beta[i], tol);
        if (j + 1 < total)
            iv.hi = refine_edge(mix, b_bar2, curve.grid[j + 1], curve.grid[j], curve.beta[j], tol);
        curve.support.push_back(iv);
        if (j - i + 1 < 8)
            curve.warnings.push_back("support interval [" + std::to_string(iv.lo) + ", " +
                                     std::to_string(iv.hi) +
                                     "] is sampled by fewer than 8 grid points");
        i = j + 1;
    }

    curve.cumulative.assign(total, 0.0);
    for (std::size_t k = 1; k < total; ++k)
        curve.cumulative[k] = curve.cumulative[k - 1] +
                              0.5 * (curve.density[k] + curve.density[k - 1]) *
                                  (curve.grid[k] - curve.grid[k - 1]);
    return curve;
}

double cdf(const LsdCurve& curve, double x) {
    if (curve.grid.empty()) throw std::invalid_argument("cdf: empty curve");
    double value;
    if (x <= curve.grid.front()) {
        value = 0.0;
    } else if (x >= curve.grid.back()) {
        value = curve.cumulative.back();
    } else {
        const auto it = std::upper_bound(curve.grid.begin(), curve.grid.end(), x);
        const std::size_t k = static_cast<std::size_t>(it - curve.grid.begin());
        const double x0 = curve.grid[k - 1], x1 = curve.grid[k];
        const double t = (x - x0) / (x1 - x0);
        const double f_at = curve.density[k - 1] + t * (curve.density[k] - curve.density[k - 1]);
        value = curve.cumulative[k - 1] + 0.5 * (curve.density[k - 1] + f_at) * (x - x0);
    }
    if (x >= 0.0) value += curve.atom_at_zero;
    return std::clamp(value, 0.0, 1.0);
}

double total_mass(const LsdCurve& curve) {
    return curve.atom_at_zero + (curve.cumulative.empty() ? 0.0 : curve.cumulative.back());
}

}  // namespace specsep
