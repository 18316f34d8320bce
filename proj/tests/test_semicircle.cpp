#include <doctest.h>

#include <cmath>
#include <vector>

#include "specsep/mixture.hpp"
#include "specsep/semicircle.hpp"

using specsep::AtomicMixture;
using specsep::FluctuationMixture;
using specsep::mixture_cdf;
using specsep::sc_cdf;
using specsep::sc_density;
using specsep::ScaledSemicircle;

namespace {

// Simpson quadrature of the semicircle density from -2σ to x; the closed
// form is checked against this, not against itself.
double sc_cdf_quadrature(double sigma, double x) {
    const double lo = -2.0 * sigma;
    if (x <= lo) return 0.0;
    const double hi = std::min(x, 2.0 * sigma);
    const int cells = 20000;
    const double h = (hi - lo) / cells;
    double acc = 0.0;
    for (int k = 0; k < cells; ++k) {
        const double a = lo + k * h;
        acc += h / 6.0 *
               (sc_density({sigma}, a) + 4.0 * sc_density({sigma}, a + 0.5 * h) +
                sc_density({sigma}, a + h));
    }
    return acc;
}

}  // namespace

TEST_SUITE("semicircle") {

TEST_CASE("closed-form cdf values") {
    CHECK(sc_cdf({1.0}, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(sc_cdf({1.0}, 2.0) == 1.0);
    CHECK(sc_cdf({1.0}, -2.0) == 0.0);
    CHECK(sc_cdf({1.0}, 5.0) == 1.0);
    // Scale invariance point value: F(2; σ=2) = F(1; σ=1) ≈ 0.80450.
    CHECK(sc_cdf({2.0}, 2.0) == doctest::Approx(sc_cdf({1.0}, 1.0)).epsilon(1e-15));
    CHECK(sc_cdf({1.0}, 1.0) == doctest::Approx(0.8044988905221147).epsilon(1e-12));
}

TEST_CASE("closed form matches quadrature of the density") {
    for (double sigma : {0.5, 1.0, 2.0}) {
        for (double x : {-1.9, -1.0, -0.3, 0.0, 0.4, 1.1, 1.9}) {
            const double scaled = x * sigma;
            CHECK(sc_cdf({sigma}, scaled) ==
                  doctest::Approx(sc_cdf_quadrature(sigma, scaled)).epsilon(1e-9));
        }
    }
}

TEST_CASE("fluctuation mixture components") {
    const AtomicMixture mix({1.0, 2.0, 3.0}, {1.0 / 3, 1.0 / 3, 1.0 / 3});
    const FluctuationMixture law(mix, 1.0);
    REQUIRE(law.components().size() == 3);
    // σ_j = √(b̄₂ c_j)·α_j with atoms descending.
    CHECK(law.components()[0].sigma == doctest::Approx(std::sqrt(1.0 / 3) * 3.0));
    CHECK(law.components()[2].sigma == doctest::Approx(std::sqrt(1.0 / 3) * 1.0));

    CHECK(mixture_cdf(law, 0.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(mixture_cdf(law, 10.0) == doctest::Approx(1.0));
    CHECK(mixture_cdf(law, -10.0) == doctest::Approx(0.0));
}

TEST_CASE("single component reduces to the plain semicircle") {
    const AtomicMixture mix({1.0}, {1.0});
    const FluctuationMixture law(mix, 1.0);
    for (double x = -2.5; x <= 2.5; x += 0.25)
        CHECK(mixture_cdf(law, x) == doctest::Approx(sc_cdf({1.0}, x)).epsilon(1e-15));
}

TEST_CASE("two components beyond all supports") {
    const AtomicMixture mix({2.0, 1.0}, {0.5, 0.5});
    const FluctuationMixture law(mix, 1.0);
    // Largest edge is 2·√0.5·2 ≈ 2.83.
    CHECK(mixture_cdf(law, 10.0) == 1.0);
    CHECK(mixture_cdf(law, 2.9) == 1.0);
}

TEST_CASE("degenerate component is a point mass at zero") {
    const AtomicMixture mix({1.0, 0.0}, {0.6, 0.4});
    const FluctuationMixture law(mix, 1.0);
    CHECK(mixture_cdf(law, -1e-9) < 0.5);
    CHECK(mixture_cdf(law, 0.0) - mixture_cdf(law, -1e-9) ==
          doctest::Approx(0.4).epsilon(1e-6));
}

TEST_CASE("mixture cdf is nondecreasing with limits 0 and 1") {
    const AtomicMixture mix({3.0, 1.5, 0.5}, {0.2, 0.5, 0.3});
    const FluctuationMixture law(mix, 2.0);
    double prev = 0.0;
    for (double x = -12.0; x <= 12.0; x += 0.05) {
        const double v = mixture_cdf(law, x);
        CHECK(v >= prev - 1e-15);
        prev = v;
    }
    CHECK(mixture_cdf(law, -1e6) == 0.0);
    CHECK(mixture_cdf(law, 1e6) == 1.0);
}

}  // TEST_SUITE
