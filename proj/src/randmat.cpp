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
#include "specsep/randmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "specsep/eigen_sym.hpp"
#include "specsep/rng.hpp"

namespace specsep {

using cplx = std::complex<double>;

EntryLaw entry_law_from_string(const std::string& name) {
    if (name == "gaussian") return EntryLaw::kStandardGaussian;
    if (name == "rademacher") return EntryLaw::kRademacher;
    if (name == "uniform") return EntryLaw::kUniformPmSqrt3;
    if (name == "complex-gaussian") return EntryLaw::kComplexGaussian;
    throw std::invalid_argument("unknown entry law: " + name);
}

std::string to_string(EntryLaw law) {
    switch (law) {
        case EntryLaw::kStandardGaussian: return "gaussian";
        case EntryLaw::kRademacher: return "rademacher";
        case EntryLaw::kUniformPmSqrt3: return "uniform";
        case EntryLaw::kComplexGaussian: return "complex-gaussian";
    }
    return "?";
}

double SampledModel::b_bar_n() const {
    return std::accumulate(b_eigs.begin(), b_eigs.end(), 0.0) / static_cast<double>(n());
}

std::vector<int> apportion_multiplicities(const std::vector<double>& weights, int p) {
    const std::size_t m = weights.size();
    std::vector<int> counts(m);
    std::vector<double> remainder(m);
    int assigned = 0;
    for (std::size_t j = 0; j < m; ++j) {
        const double exact = weights[j] * p;
        counts[j] = static_cast<int>(std::floor(exact));
        remainder[j] = exact - counts[j];
        assigned += counts[j];
    }
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
    for (int k = 0; k < p - assigned; ++k) ++counts[order[k % m]];
    return counts;
}

SampledModel make_model(const AtomicMixture& mix, const BFactorSpec& bspec, int p, int n,
                        EntryLaw law, std::uint64_t seed) {
    if (p < 2 || n < p) throw std::invalid_argument("make_model: need 2 <= p <= n");
    SampledModel model;
    model.law = law;
    model.seed = seed;

    const std::vector<int> mult = apportion_multiplicities(mix.weights(), p);
    model.a_eigs.reserve(p);
    for (std::size_t j = 0; j < mix.size(); ++j)
        model.a_eigs.insert(model.a_eigs.end(), mult[j], mix.atoms()[j]);

    if (bspec.is_explicit()) {
        if (static_cast<int>(bspec.eigenvalues().size()) != n)
            throw std::invalid_argument("make_model: explicit B spectrum length differs from n");
        model.b_eigs = bspec.eigenvalues();
    } else {
        const SpectralMoments mom = bspec.stored_moments();
        model.b_eigs = build_two_block_b(mom.b_bar, mom.b_bar2, n);
    }
    return model;
}

EmpiricalDistribution::EmpiricalDistribution(std::vector<double> values)
    : samples(std::move(values)) {
    if (samples.empty()) throw std::invalid_argument("EmpiricalDistribution: empty sample");
    std::sort(samples.begin(), samples.end());
}

double EmpiricalDistribution::cdf(double x) const {
    const auto it = std::upper_bound(samples.begin(), samples.end(), x);
    return static_cast<double>(it - samples.begin()) / static_cast<double>(samples.size());
}

double esd_cdf(const EmpiricalDistribution& ed, double x) { return ed.cdf(x); }

std::vector<double> draw_x(const SampledModel& model, std::uint64_t replicate) {
    if (model.law == EntryLaw::kComplexGaussian)
        throw std::invalid_argument("draw_x: complex law has no real matrix");
    PhiloxRng rng(model.seed, replicate);
    std::vector<double> x(static_cast<std::size_t>(model.p()) * model.n());
    switch (model.law) {
        case EntryLaw::kStandardGaussian:
            for (double& v : x) v = rng.next_gaussian();
            break;
        case EntryLaw::kRademacher:
            for (double& v : x) v = rng.next_rademacher();
            break;
        case EntryLaw::kUniformPmSqrt3:
            for (double& v : x) v = rng.next_uniform_pm_sqrt3();
            break;
        default: break;
    }
    return x;
}

namespace {

std::vector<cplx> draw_x_complex(const SampledModel& model, std::uint64_t replicate) {
    PhiloxRng rng(model.seed, replicate);
    std::vector<cplx> x(static_cast<std::size_t>(model.p()) * model.n());
    for (cplx& v : x) v = rng.next_complex_gaussian();
    return x;
}

// S = W W* for W(i,k) = √a_i · X(i,k) · √b_k / √n; returns the dense p×p
// Gram matrix (row-major, both triangles filled).
template <typename Scalar>
std::vector<Scalar> gram_matrix(const SampledModel& model, const std::vector<Scalar>& x) {
    const int p = model.p();
    const int n = model.n();
    if (static_cast<int>(x.size()) != p * n)
        throw std::invalid_argument("gram_matrix: X has wrong shape");

    std::vector<double> sqrt_a(p), sqrt_b(n);
    for (int i = 0; i < p; ++i) sqrt_a[i] = std::sqrt(model.a_eigs[i]);
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    for (int k = 0; k < n; ++k) sqrt_b[k] = std::sqrt(model.b_eigs[k]) * inv_sqrt_n;

    std::vector<Scalar> w(x.size());
    for (int i = 0; i < p; ++i)
        for (int k = 0; k < n; ++k)
            w[static_cast<std::size_t>(i) * n + k] =
                sqrt_a[i] * x[static_cast<std::size_t>(i) * n + k] * sqrt_b[k];

    std::vector<Scalar> s(static_cast<std::size_t>(p) * p);
    for (int i = 0; i < p; ++i) {
        const Scalar* wi = w.data() + static_cast<std::size_t>(i) * n;
        for (int j = 0; j <= i; ++j) {
            const Scalar* wj = w.data() + static_cast<std::size_t>(j) * n;
            Scalar acc{};
            if constexpr (std::is_same_v<Scalar, double>) {
                for (int k = 0; k < n; ++k) acc += wi[k] * wj[k];
            } else {
                for (int k = 0; k < n; ++k) acc += wi[k] * std::conj(wj[k]);
            }
            s[static_cast<std::size_t>(i) * p + j] = acc;
            if constexpr (std::is_same_v<Scalar, double>)
                s[static_cast<std::size_t>(j) * p + i] = acc;
            else
                s[static_cast<std::size_t>(j) * p + i] = std::conj(acc);
        }
    }
    return s;
}

template <typename Scalar>
void recenter_to_c(const SampledModel& model, std::vector<Scalar>& s) {
    const int p = model.p();
    const double scale = std::sqrt(static_cast<double>(model.n()) / p);
    const double b_bar = model.b_bar_n();
    for (int i = 0; i < p; ++i)
        s[static_cast<std::size_t>(i) * p + i] -= b_bar * model.a_eigs[i];
    for (Scalar& v : s) v *= scale;
}

std::vector<double> descending(std::vector<double> v) {
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

}  // namespace

std::vector<double> c_eigenvalues_from_x(const SampledModel& model,
                                         const std::vector<double>& x) {
    std::vector<double> s = gram_matrix(model, x);
    recenter_to_c(model, s);
    return sym_eigenvalues(std::move(s), model.p());
}

std::vector<double> c_eigenvalues_from_x(const SampledModel& model, const std::vector<cplx>& x) {
    std::vector<cplx> s = gram_matrix(model, x);
    recenter_to_c(model, s);
    return herm_eigenvalues(s, model.p());
}

std::vector<double> s_eigenvalues_from_x(const SampledModel& model,
                                         const std::vector<double>& x) {
    return descending(sym_eigenvalues(gram_matrix(model, x), model.p()));
}

EmpiricalDistribution sample_c_n(const SampledModel& model, std::uint64_t replicate) {
    std::vector<double> eigs = (model.law == EntryLaw::kComplexGaussian)
                                   ? c_eigenvalues_from_x(model, draw_x_complex(model, replicate))
                                   : c_eigenvalues_from_x(model, draw_x(model, replicate));
    return EmpiricalDistribution(std::move(eigs));
}

std::vector<double> sample_s_n_eigs(const SampledModel& model, std::uint64_t replicate) {
    if (model.law == EntryLaw::kComplexGaussian) {
        const std::vector<cplx> s = gram_matrix(model, draw_x_complex(model, replicate));
        return descending(herm_eigenvalues(s, model.p()));
    }
    return s_eigenvalues_from_x(model, draw_x(model, replicate));
}

std::vector<double> null_centered_eigs(const SampledModel& data_model,
                                       const std::vector<double>& a0_eigs, double b_bar0,
                                       std::uint64_t replicate) {
    const int p = data_model.p();
    if (static_cast<int>(a0_eigs.size()) != p)
        throw std::invalid_argument("null_centered_eigs: hypothesized spectrum length != p");
    if (data_model.law == EntryLaw::kComplexGaussian) {
        std::vector<cplx> s = gram_matrix(data_model, draw_x_complex(data_model, replicate));
        const double scale = std::sqrt(static_cast<double>(data_model.n()) / p);
        for (int i = 0; i < p; ++i)
            s[static_cast<std::size_t>(i) * p + i] -= b_bar0 * a0_eigs[i];
        for (cplx& v : s) v *= scale;
        return herm_eigenvalues(s, p);
    }
    std::vector<double> s = gram_matrix(data_model, draw_x(data_model, replicate));
    const double scale = std::sqrt(static_cast<double>(data_model.n()) / p);
    for (int i = 0; i < p; ++i)
        s[static_cast<std::size_t>(i) * p + i] -= b_bar0 * a0_eigs[i];
    for (double& v : s) v *= scale;
    return sym_eigenvalues(std::move(s), p);
}

EmpiricalDistribution fluctuation_sample(const SampledModel& model, std::uint64_t replicate) {
    const std::vector<double> s_eigs = sample_s_n_eigs(model, replicate);
    const double scale = std::sqrt(static_cast<double>(model.n()) / model.p());
    const double b_bar = model.b_bar_n();
    std::vector<double> fluct(model.p());
    for (int j = 0; j < model.p(); ++j)
        fluct[j] = scale * (s_eigs[j] - b_bar * model.a_eigs[j]);
    return EmpiricalDistribution(std::move(fluct));
}

}  // namespace specsep
