#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "specsep/eigen_sym.hpp"
#include "specsep/poly_roots.hpp"
#include "specsep/rng.hpp"

using specsep::herm_eigenvalues;
using specsep::PhiloxRng;
using specsep::sym_eigenvalues;

namespace {

std::vector<double> random_symmetric(int n, std::uint64_t seed) {
    PhiloxRng rng(seed, 0);
    std::vector<double> a(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) a[i * n + j] = a[j * n + i] = rng.next_gaussian();
    return a;
}

// Characteristic polynomial coefficients via the Faddeev-LeVerrier
// recursion: an eigensolver-independent oracle for small matrices.
std::vector<std::complex<double>> char_poly(const std::vector<double>& a, int n) {
    std::vector<double> m(a), prev;
    std::vector<double> c(n + 1, 0.0);
    c[n] = 1.0;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            // M_k = A (M_{k-1} + c_{n-k+1} I)
            std::vector<double> shifted(prev);
            for (int i = 0; i < n; ++i) shifted[i * n + i] += c[n - k + 1];
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    double acc = 0.0;
                    for (int l = 0; l < n; ++l) acc += a[i * n + l] * shifted[l * n + j];
                    m[i * n + j] = acc;
                }
        }
        double trace = 0.0;
        for (int i = 0; i < n; ++i) trace += m[i * n + i];
        c[n - k] = -trace / k;
        prev = m;
    }
    return {c.begin(), c.end()};
}

}  // namespace

TEST_SUITE("eigen_sym") {

TEST_CASE("diagonal matrices are exact") {
    const std::vector<double> diag = {3.5, -1.25, 0.0, 7.0, 2.0};
    const int n = 5;
    std::vector<double> a(n * n, 0.0);
    for (int i = 0; i < n; ++i) a[i * n + i] = diag[i];
    const std::vector<double> eig = sym_eigenvalues(a, n);
    std::vector<double> expected(diag);
    std::sort(expected.begin(), expected.end());
    for (int i = 0; i < n; ++i) CHECK(eig[i] == doctest::Approx(expected[i]).epsilon(1e-14));
}

TEST_CASE("2x2 closed form") {
    // [[2, 1], [1, 2]] has eigenvalues 1 and 3.
    std::vector<double> a = {2.0, 1.0, 1.0, 2.0};
    const std::vector<double> eig = sym_eigenvalues(a, 2);
    CHECK(eig[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(eig[1] == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("matches the characteristic-polynomial oracle on small matrices") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const int n = 4;
        const std::vector<double> a = random_symmetric(n, seed);
        const std::vector<double> eig = sym_eigenvalues(a, n);
        auto roots = specsep::polynomial_roots(char_poly(a, n));
        std::vector<double> expected;
        for (const auto& r : roots) {
            CHECK(std::abs(r.imag()) < 1e-8);
            expected.push_back(r.real());
        }
        std::sort(expected.begin(), expected.end());
        for (int i = 0; i < n; ++i) CHECK(eig[i] == doctest::Approx(expected[i]).epsilon(1e-9));
    }
}

TEST_CASE("trace and Frobenius identities on 100 random 50x50 matrices") {
    const int n = 50;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const std::vector<double> a = random_symmetric(n, 1000 + seed);
        double trace = 0.0, frob2 = 0.0, norm_bound = 0.0;
        for (int i = 0; i < n; ++i) {
            trace += a[i * n + i];
            double row = 0.0;
            for (int j = 0; j < n; ++j) {
                frob2 += a[i * n + j] * a[i * n + j];
                row += std::abs(a[i * n + j]);
            }
            norm_bound = std::max(norm_bound, row);
        }
        const std::vector<double> eig = sym_eigenvalues(a, n);
        double sum = 0.0, sum2 = 0.0;
        for (double v : eig) {
            sum += v;
            sum2 += v * v;
        }
        CHECK(std::abs(sum - trace) <= 1e-10 * norm_bound);
        CHECK(std::abs(sum2 - frob2) <= 1e-9 * norm_bound * norm_bound);
    }
}

TEST_CASE("hermitian eigenvalues through the real embedding") {
    // [[2, i], [-i, 2]] has eigenvalues 1 and 3.
    std::vector<std::complex<double>> h = {
        {2.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}, {2.0, 0.0}};
    const std::vector<double> eig = herm_eigenvalues(h, 2);
    CHECK(eig[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(eig[1] == doctest::Approx(3.0).epsilon(1e-12));

    // Random Hermitian: trace and Frobenius identities.
    PhiloxRng rng(5, 0);
    const int n = 20;
    std::vector<std::complex<double>> a(n * n);
    for (int i = 0; i < n; ++i) {
        a[i * n + i] = rng.next_gaussian();
        for (int j = 0; j < i; ++j) {
            const std::complex<double> z = rng.next_complex_gaussian();
            a[i * n + j] = z;
            a[j * n + i] = std::conj(z);
        }
    }
    double trace = 0.0, frob2 = 0.0;
    for (int i = 0; i < n; ++i) {
        trace += a[i * n + i].real();
        for (int j = 0; j < n; ++j) frob2 += std::norm(a[i * n + j]);
    }
    const std::vector<double> eig2 = herm_eigenvalues(a, n);
    double sum = 0.0, sum2 = 0.0;
    for (double v : eig2) {
        sum += v;
        sum2 += v * v;
    }
    CHECK(sum == doctest::Approx(trace).epsilon(1e-10));
    CHECK(sum2 == doctest::Approx(frob2).epsilon(1e-9));
}

}  // TEST_SUITE
