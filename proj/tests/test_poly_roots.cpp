#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "specsep/poly_roots.hpp"
#include "specsep/rng.hpp"

using cplx = std::complex<double>;
using specsep::polynomial_roots;

namespace {

// Largest distance from each expected root to its best match.
double match_roots(std::vector<cplx> found, const std::vector<cplx>& expected) {
    double worst = 0.0;
    for (const cplx& e : expected) {
        double best = 1e300;
        std::size_t best_i = 0;
        for (std::size_t i = 0; i < found.size(); ++i) {
            const double d = std::abs(found[i] - e);
            if (d < best) {
                best = d;
                best_i = i;
            }
        }
        worst = std::max(worst, best);
        found.erase(found.begin() + best_i);
    }
    return worst;
}

}  // namespace

TEST_SUITE("poly_roots") {

TEST_CASE("quadratic with complex pair") {
    // z² + z + 1: roots (-1 ± i√3)/2.
    const auto roots = polynomial_roots({{1, 0}, {1, 0}, {1, 0}});
    const double s3 = std::sqrt(3.0) / 2.0;
    CHECK(match_roots(roots, {{-0.5, s3}, {-0.5, -s3}}) < 1e-14);
}

TEST_CASE("roots at the origin are deflated exactly") {
    // z³ - z² = z²(z - 1).
    const auto roots = polynomial_roots({{0, 0}, {0, 0}, {-1, 0}, {1, 0}});
    REQUIRE(roots.size() == 3);
    CHECK(match_roots(roots, {{0, 0}, {0, 0}, {1, 0}}) < 1e-12);
}

TEST_CASE("random polynomials from known roots") {
    specsep::PhiloxRng rng(2024, 0);
    for (int trial = 0; trial < 40; ++trial) {
        const int degree = 2 + static_cast<int>(rng.next_u32() % 7);
        std::vector<cplx> expected(degree);
        for (cplx& r : expected)
            r = {3.0 * (rng.next_unit() - 0.5), 3.0 * (rng.next_unit() - 0.5)};
        std::vector<cplx> coeffs{1.0};
        for (const cplx& r : expected) {
            coeffs.push_back(0.0);
            for (std::size_t k = coeffs.size() - 1; k >= 1; --k)
                coeffs[k] = coeffs[k - 1] - r * coeffs[k];
            coeffs[0] *= -r;
        }
        const auto roots = polynomial_roots(coeffs);
        REQUIRE(roots.size() == expected.size());
        CHECK(match_roots(roots, expected) < 1e-7);

        for (const cplx& z : roots) {
            cplx value, deriv;
            specsep::poly_eval(coeffs, z, value, deriv);
            double scale = 0.0;
            for (const cplx& c : coeffs) scale = std::max(scale, std::abs(c));
            CHECK(std::abs(value) < 1e-8 * (1.0 + scale));
        }
    }
}

TEST_CASE("degenerate inputs") {
    CHECK_THROWS_AS(polynomial_roots({}), std::invalid_argument);
    CHECK_THROWS_AS(polynomial_roots({{0, 0}, {0, 0}}), std::invalid_argument);
    CHECK(polynomial_roots({{5, 0}}).empty());
    const auto lin = polynomial_roots({{2, 0}, {4, 0}});
    REQUIRE(lin.size() == 1);
    CHECK(std::abs(lin[0] - cplx(-0.5, 0.0)) < 1e-15);
}

}  // TEST_SUITE
