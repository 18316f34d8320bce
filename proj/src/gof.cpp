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
#include "specsep/gof.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "specsep/errors.hpp"
#include "specsep/parallel.hpp"

namespace specsep {

namespace {

double support_left(const LsdCurve& lsd) {
    return lsd.support.empty() ? lsd.grid.front() : lsd.support.front().lo;
}

double support_right(const LsdCurve& lsd) {
    return lsd.support.empty() ? lsd.grid.back() : lsd.support.back().hi;
}

// Trapezoid of (F̂ - F)² over [lo, hi] with both CDFs advanced by marching
// pointers; O(points + samples + grid).
double l2_trapezoid(const EmpiricalDistribution& esd, const LsdCurve& lsd, double lo, double hi,
                    std::size_t intervals) {
    const double h = (hi - lo) / static_cast<double>(intervals);
    const std::vector<double>& s = esd.samples;
    const double inv_count = 1.0 / static_cast<double>(s.size());
    std::size_t si = 0;  // #samples ≤ x
    std::size_t gi = 0;  // grid cell index: grid[gi] ≤ x < grid[gi+1]
    const std::vector<double>& g = lsd.grid;

    double acc = 0.0;
    for (std::size_t k = 0; k <= intervals; ++k) {
        const double x = (k == intervals) ? hi : lo + static_cast<double>(k) * h;
        while (si < s.size() && s[si] <= x) ++si;
        const double f_hat = static_cast<double>(si) * inv_count;

        double f_lsd;
        if (x <= g.front()) {
            f_lsd = 0.0;
        } else if (x >= g.back()) {
            f_lsd = lsd.cumulative.back();
        } else {
            while (gi + 1 < g.size() && g[gi + 1] <= x) ++gi;
            const double x0 = g[gi], x1 = g[gi + 1];
            const double t = (x - x0) / (x1 - x0);
            const double fd =
                lsd.density[gi] + t * (lsd.density[gi + 1] - lsd.density[gi]);
            f_lsd = lsd.cumulative[gi] + 0.5 * (lsd.density[gi] + fd) * (x - x0);
        }
        if (x >= 0.0) f_lsd += lsd.atom_at_zero;
        f_lsd = std::clamp(f_lsd, 0.0, 1.0);

        const double diff = f_hat - f_lsd;
        const double weight = (k == 0 || k == intervals) ? 0.5 : 1.0;
        acc += weight * diff * diff;
    }
    return acc * h;
}

}  // namespace

double l2_statistic(const EmpiricalDistribution& esd, const LsdCurve& lsd) {
    const double lo = std::min(support_left(lsd), esd.samples.front()) - 1.0;
    const double hi = std::max(support_right(lsd), esd.samples.back()) + 1.0;
    std::size_t intervals = static_cast<std::size_t>(std::ceil((hi - lo) / 1e-3));
    double prev = l2_trapezoid(esd, lsd, lo, hi, intervals);
    for (int level = 0; level < 16; ++level) {
        intervals *= 2;
        const double cur = l2_trapezoid(esd, lsd, lo, hi, intervals);
        if (std::abs(cur - prev) < 1e-6) return cur;
        prev = cur;
    }
    throw NumericalError("l2_statistic: refinement did not settle below 1e-6");
}

double cvm_statistic(const EmpiricalDistribution& esd, const LsdCurve& lsd) {
    double acc = 0.0;
    for (const Interval& iv : lsd.support) {
        double prev_x = 0.0, prev_g = 0.0;
        bool have_prev = false;
        for (std::size_t k = 0; k < lsd.grid.size(); ++k) {
            const double x = lsd.grid[k];
            if (x < iv.lo || x > iv.hi) continue;
            const double diff = esd.cdf(x) - cdf(lsd, x);
            const double g = diff * diff * lsd.density[k];
            if (have_prev) acc += 0.5 * (g + prev_g) * (x - prev_x);
            prev_x = x;
            prev_g = g;
            have_prev = true;
        }
    }
    if (lsd.atom_at_zero > 0.0) {
        const double diff = esd.cdf(0.0) - cdf(lsd, 0.0);
        acc += diff * diff * lsd.atom_at_zero;
    }
    return acc;
}

double sample_quantile(const std::vector<double>& sorted, double prob) {
    if (sorted.empty()) throw std::invalid_argument("sample_quantile: empty sample");
    if (prob <= 0.0) return sorted.front();
    if (prob >= 1.0) return sorted.back();
    const double h = prob * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(h));
    const double frac = h - static_cast<double>(lo);
    if (lo + 1 >= sorted.size()) return sorted.back();
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

std::vector<std::pair<double, double>> qq_data(const std::vector<double>& null_sorted,
                                               const std::vector<double>& alt_sorted,
                                               const std::vector<double>& probs) {
    std::vector<std::pair<double, double>> pairs;
    pairs.reserve(probs.size());
    for (double prob : probs)
        pairs.emplace_back(sample_quantile(null_sorted, prob), sample_quantile(alt_sorted, prob));
    return pairs;
}

double default_grid_half(const AtomicMixture& mix, double b_bar2) {
    // The LSD variance is b̄₂·∫a²dF; the edge of these semicircle-like laws
    // stays inside ~2.1 standard deviations, padded generously.
    return 2.6 * std::sqrt(b_bar2 * mix.second_moment()) + 1.0;
}

LsdCurve build_null_curve(const AtomicMixture& a0, double b_bar2_0, double step) {
    const double half = default_grid_half(a0, b_bar2_0);
    return build_curve(a0, b_bar2_0, -half, half, step);
}

NullDistribution monte_carlo_null(const NullSpec& spec, int replicates, std::uint64_t seed,
                                  int threads, const LsdCurve* curve) {
    if (replicates < 1) throw std::invalid_argument("monte_carlo_null: replicates must be >= 1");
    LsdCurve local;
    if (!curve) {
        local = build_null_curve(spec.a0, spec.b_bar2_0);
        curve = &local;
    }
    const BFactorSpec b0 =
        BFactorSpec::from_eigenvalues(build_two_block_b(spec.b_bar0, spec.b_bar2_0, spec.n));
    const SampledModel model =
        make_model(spec.a0, b0, spec.p, spec.n, EntryLaw::kStandardGaussian, seed);

    NullDistribution out;
    out.replicates = replicates;
    out.seed = seed;
    out.values.assign(replicates, 0.0);
    parallel_for(replicates, threads, [&](int r) {
        const EmpiricalDistribution esd = sample_c_n(model, static_cast<std::uint64_t>(r));
        out.values[r] = l2_statistic(esd, *curve);
    });
    std::sort(out.values.begin(), out.values.end());
    for (double prob : kQuantileLadder) out.quantiles[prob] = sample_quantile(out.values, prob);
    return out;
}

double p_value_against(const NullDistribution& null_dist, double statistic) {
    const auto it =
        std::lower_bound(null_dist.values.begin(), null_dist.values.end(), statistic);
    const std::size_t geq = null_dist.values.size() - (it - null_dist.values.begin());
    return (1.0 + static_cast<double>(geq)) / (static_cast<double>(null_dist.values.size()) + 1.0);
}

TestReport run_test(const EmpiricalDistribution& observed, const NullSpec& spec, int replicates,
                    std::uint64_t seed, int threads, const LsdCurve* curve) {
    LsdCurve local;
    if (!curve) {
        local = build_null_curve(spec.a0, spec.b_bar2_0);
        curve = &local;
    }
    const NullDistribution null_dist = monte_carlo_null(spec, replicates, seed, threads, curve);
    TestReport report;
    report.statistic = l2_statistic(observed, *curve);
    report.null_quantiles = null_dist.quantiles;
    report.p_value = p_value_against(null_dist, report.statistic);
    report.replicates = replicates;
    report.seed = seed;
    return report;
}

}  // namespace specsep
