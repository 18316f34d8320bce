#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "specsep/lsd.hpp"
#include "specsep/mixture.hpp"
#include "specsep/stieltjes.hpp"

using cplx = std::complex<double>;
using specsep::AtomicMixture;
using specsep::beta_polynomial;
using specsep::BetaSolution;
using specsep::build_curve;
using specsep::density_at;
using specsep::LsdCurve;
using specsep::solve_beta;

namespace {

const AtomicMixture kDelta1({1.0}, {1.0});
const AtomicMixture kThirds({1.0, 2.0, 3.0}, {1.0 / 3, 1.0 / 3, 1.0 / 3});
const AtomicMixture kHalfZero({1.0, 0.0}, {0.5, 0.5});

double rational_residual(const AtomicMixture& mix, double b2, double x, cplx beta) {
    cplx h = beta;
    for (std::size_t j = 0; j < mix.size(); ++j) {
        const double a = mix.atoms()[j];
        if (a == 0.0) continue;
        h += mix.weights()[j] * a / (x + b2 * a * beta);
    }
    return std::abs(h);
}

}  // namespace

TEST_SUITE("lsd") {

TEST_CASE("single-atom polynomial is the quadratic") {
    const auto coeffs = beta_polynomial(kDelta1, 1.0, 1.0);
    REQUIRE(coeffs.size() == 3);
    CHECK(coeffs[0] == cplx(1.0));  // constant: Σ c a
    CHECK(coeffs[1] == cplx(1.0));  // x
    CHECK(coeffs[2] == cplx(1.0));  // b̄₂
}

TEST_CASE("three-atom quartic from symbolic expansion") {
    // 3·P(β) = 18β⁴ + 33xβ³ + (18x²+18)β² + (3x³+22x)β + 6x².
    for (double x : {1.0, 2.0, -0.75}) {
        const auto coeffs = beta_polynomial(kThirds, 1.0, x);
        REQUIRE(coeffs.size() == 5);
        const std::vector<double> expected = {6.0 * x * x, 3.0 * x * x * x + 22.0 * x,
                                              18.0 * x * x + 18.0, 33.0 * x, 18.0};
        for (std::size_t k = 0; k < expected.size(); ++k)
            CHECK(3.0 * coeffs[k].real() ==
                  doctest::Approx(expected[k]).epsilon(1e-13));
    }
}

TEST_CASE("zero atoms drop out of the polynomial") {
    const double x = 0.8;
    const auto coeffs = beta_polynomial(kHalfZero, 1.0, x);
    REQUIRE(coeffs.size() == 3);
    CHECK(coeffs[0] == cplx(0.5));
    CHECK(coeffs[1] == cplx(x));
    CHECK(coeffs[2] == cplx(1.0));
}

TEST_CASE("selected branch inside the support") {
    const BetaSolution sol = solve_beta(kDelta1, 1.0, 1.0);
    CHECK(sol.admissible);
    CHECK(std::abs(sol.beta - cplx(-0.5, std::sqrt(3.0) / 2.0)) < 1e-12);
    CHECK(sol.omega == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("outside the support the branch is real with omega below 1") {
    const BetaSolution sol = solve_beta(kDelta1, 1.0, 3.0);
    CHECK_FALSE(sol.admissible);
    CHECK(std::abs(sol.beta.imag()) <= specsep::kTauIm);
    // β(3) = (-3 + √5)/2 for the σ=1 semicircle.
    CHECK(sol.beta.real() == doctest::Approx((std::sqrt(5.0) - 3.0) / 2.0).epsilon(1e-12));
    CHECK(sol.omega < 1.0);
    CHECK(density_at(sol) == 0.0);

    const BetaSolution neg = solve_beta(kDelta1, 1.0, -3.0);
    CHECK(neg.beta.real() == doctest::Approx((3.0 - std::sqrt(5.0)) / 2.0).epsilon(1e-12));
}

TEST_CASE("scale map: b_bar2 = 4 relates to the sigma 2 semicircle") {
    const BetaSolution sol = solve_beta(kDelta1, 4.0, 1.0);
    CHECK(sol.admissible);
    CHECK(std::abs(sol.beta - cplx(-1.0 / 8.0, std::sqrt(15.0) / 8.0)) < 1e-12);
    // Same point through the explicit scale relation β_b(x) = β_1(x/√b)/√b.
    const BetaSolution base = solve_beta(kDelta1, 1.0, 0.5);
    CHECK(std::abs(sol.beta - base.beta / 2.0) < 1e-12);
}

TEST_CASE("density values of the semicircle") {
    CHECK(density_at(solve_beta(kDelta1, 1.0, 1e-3)) == doctest::Approx(1.0 / M_PI).epsilon(1e-6));
    CHECK(density_at(solve_beta(kDelta1, 1.0, 2.0)) == 0.0);
    CHECK(density_at(solve_beta(kDelta1, 1.0, 1.0)) ==
          doctest::Approx(std::sqrt(3.0) / (2.0 * M_PI)).epsilon(1e-12));
}

TEST_CASE("density agrees with the inversion oracle pointwise") {
    CHECK(density_at(solve_beta(kThirds, 1.0, 1.0)) ==
          doctest::Approx(specsep::density_inversion(kThirds, 1.0, 1.0)).epsilon(1e-4));
    CHECK(density_at(solve_beta(kHalfZero, 1.0, 0.5)) ==
          doctest::Approx(specsep::density_inversion(kHalfZero, 1.0, 0.5)).epsilon(1e-4));
}

TEST_CASE("root residuals stay below 1e-9 across a sweep") {
    for (const AtomicMixture* mix : {&kDelta1, &kThirds, &kHalfZero}) {
        std::optional<cplx> hint;
        for (double x = 0.01; x < 6.0; x += 0.037) {
            const BetaSolution sol = solve_beta(*mix, 1.0, x, hint);
            hint = sol.beta;
            CHECK(rational_residual(*mix, 1.0, x, sol.beta) < 1e-9);
        }
    }
}

TEST_CASE("semicircle curve: support, mass, cdf") {
    const LsdCurve curve = build_curve(kDelta1, 1.0, -3.0, 3.0, 1e-3);
    REQUIRE(curve.support.size() == 1);
    CHECK(curve.support[0].lo == doctest::Approx(-2.0).epsilon(1e-3));
    CHECK(curve.support[0].hi == doctest::Approx(2.0).epsilon(1e-3));
    CHECK(specsep::total_mass(curve) == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(specsep::cdf(curve, 0.0) == doctest::Approx(0.5).epsilon(1e-3));
    CHECK(specsep::cdf(curve, -2.5) == 0.0);
    CHECK(specsep::cdf(curve, 2.5) == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(curve.atom_at_zero == 0.0);
}

TEST_CASE("semicircle reduction at both scales within 1e-8") {
    for (double b2 : {1.0, 4.0}) {
        const double edge = 2.0 * std::sqrt(b2);
        std::optional<cplx> hint;
        for (int k = 0; k < 500; ++k) {
            const double x = -edge + 1e-3 + (2.0 * edge - 2e-3) * k / 499.0;
            if (std::abs(x) < 2e-3) {
                hint.reset();
                continue;
            }
            const BetaSolution sol = solve_beta(kDelta1, b2, x, hint);
            hint = sol.beta;
            const double expected = std::sqrt(4.0 * b2 - x * x) / (2.0 * M_PI * b2);
            CHECK(density_at(sol) == doctest::Approx(expected).epsilon(1e-8));
        }
    }
}

TEST_CASE("scale covariance of the density") {
    const double b2 = 2.5;
    const double root = std::sqrt(b2);
    for (double x = 0.11; x < 6.5; x += 0.23) {
        for (double sign : {-1.0, 1.0}) {
            const double v_scaled = density_at(solve_beta(kThirds, b2, sign * x));
            const double v_base = density_at(solve_beta(kThirds, 1.0, sign * x / root));
            CHECK(v_scaled == doctest::Approx(v_base / root).epsilon(1e-8));
        }
    }
}

TEST_CASE("scaled curve: support [-4, 4] for b_bar2 = 4") {
    const LsdCurve curve = build_curve(kDelta1, 4.0, -5.0, 5.0, 2e-3);
    REQUIRE(curve.support.size() == 1);
    CHECK(curve.support[0].lo == doctest::Approx(-4.0).epsilon(1e-3));
    CHECK(curve.support[0].hi == doctest::Approx(4.0).epsilon(1e-3));
    CHECK(specsep::total_mass(curve) == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("three-atom curve: mass, symmetry, branch consistency") {
    // Deliberately awkward grid so no point sits on a band edge.
    const LsdCurve curve = build_curve(kThirds, 1.0, -6.0037, 5.9911, 9.7e-4);
    CHECK(specsep::total_mass(curve) == doctest::Approx(1.0).epsilon(1e-3));

    for (std::size_t k = 0; k < curve.grid.size(); ++k) {
        const double x = curve.grid[k];
        CHECK(rational_residual(kThirds, 1.0, x, curve.beta[k]) < 1e-9);
        const bool dens_pos = curve.density[k] > 0.0;
        const bool im_pos = curve.beta[k].imag() > specsep::kTauIm;
        const bool omega_one = curve.omega[k] >= 1.0 - 5.0 * specsep::kTauOmega &&
                               curve.omega[k] <= 1.0 + specsep::kTauOmega;
        CHECK(dens_pos == im_pos);
        CHECK(im_pos == omega_one);
    }

    // Symmetry f(x) = f(-x) via direct solves on mirrored points.
    for (double x = 0.1; x < 5.0; x += 0.31) {
        const double right = density_at(solve_beta(kThirds, 1.0, x));
        const double left = density_at(solve_beta(kThirds, 1.0, -x));
        CHECK(left == doctest::Approx(right).epsilon(1e-9));
    }
}

TEST_CASE("zero atom carries cdf jump and halves the continuous mass") {
    const LsdCurve curve = build_curve(kHalfZero, 1.0, -2.5, 2.5, 1e-3);
    CHECK(curve.atom_at_zero == doctest::Approx(0.5));
    REQUIRE(curve.support.size() == 1);
    const double sqrt2 = std::sqrt(2.0);
    CHECK(curve.support[0].lo == doctest::Approx(-sqrt2).epsilon(1e-3));
    CHECK(curve.support[0].hi == doctest::Approx(sqrt2).epsilon(1e-3));
    CHECK(specsep::total_mass(curve) == doctest::Approx(1.0).epsilon(1e-3));
    // Jump of the atom mass across 0.
    CHECK(specsep::cdf(curve, 0.0) - specsep::cdf(curve, -1e-9) ==
          doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("atom-weight example: jump of 0.3") {
    const AtomicMixture mix({1.0, 0.0}, {0.7, 0.3});
    const LsdCurve curve = build_curve(mix, 1.0, -2.5, 2.5, 1e-3);
    CHECK(specsep::cdf(curve, 0.0) - specsep::cdf(curve, -1e-9) ==
          doctest::Approx(0.3).epsilon(1e-6));
}

TEST_CASE("grid validation") {
    CHECK_THROWS_AS(build_curve(kDelta1, 1.0, 0.5, 3.0, 1e-3), std::invalid_argument);
    CHECK_THROWS_AS(build_curve(kDelta1, 1.0, -3.0, 3.0, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(solve_beta(kDelta1, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(beta_polynomial(kDelta1, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("coarse grids emit a warning") {
    const LsdCurve curve = build_curve(kDelta1, 1.0, -3.0, 3.0, 0.9);
    CHECK(!curve.warnings.empty());
}

}  // TEST_SUITE
