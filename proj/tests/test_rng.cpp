#include <doctest.h>

#include <cmath>
#include <vector>

#include "specsep/rng.hpp"

using specsep::PhiloxRng;

TEST_SUITE("rng") {

TEST_CASE("streams are reproducible and independent of draw batching") {
    PhiloxRng a(42, 7);
    PhiloxRng b(42, 7);
    for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());

    PhiloxRng c(42, 8);
    bool all_equal = true;
    PhiloxRng a2(42, 7);
    for (int i = 0; i < 64; ++i) all_equal = all_equal && (a2.next_u64() == c.next_u64());
    CHECK_FALSE(all_equal);
}

TEST_CASE("seed changes the stream") {
    PhiloxRng a(1, 0);
    PhiloxRng b(2, 0);
    int agree = 0;
    for (int i = 0; i < 64; ++i)
        if (a.next_u32() == b.next_u32()) ++agree;
    CHECK(agree < 4);
}

TEST_CASE("uniform doubles stay in range with matching mean") {
    PhiloxRng rng(123, 0);
    double sum = 0.0;
    const int count = 200000;
    for (int i = 0; i < count; ++i) {
        const double u = rng.next_unit();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
    }
    CHECK(std::abs(sum / count - 0.5) < 0.005);
}

TEST_CASE("entry laws have mean 0 and variance 1") {
    const int count = 400000;
    auto check_law = [&](auto draw) {
        PhiloxRng rng(99, 1);
        double s1 = 0.0, s2 = 0.0;
        for (int i = 0; i < count; ++i) {
            const double v = draw(rng);
            s1 += v;
            s2 += v * v;
        }
        CHECK(std::abs(s1 / count) < 0.01);
        CHECK(std::abs(s2 / count - 1.0) < 0.01);
    };
    check_law([](PhiloxRng& r) { return r.next_gaussian(); });
    check_law([](PhiloxRng& r) { return r.next_rademacher(); });
    check_law([](PhiloxRng& r) { return r.next_uniform_pm_sqrt3(); });
}

TEST_CASE("complex gaussian parts carry variance 1/2 each") {
    PhiloxRng rng(7, 3);
    const int count = 200000;
    double re2 = 0.0, im2 = 0.0, cross = 0.0;
    for (int i = 0; i < count; ++i) {
        const auto z = rng.next_complex_gaussian();
        re2 += z.real() * z.real();
        im2 += z.imag() * z.imag();
        cross += z.real() * z.imag();
    }
    CHECK(std::abs(re2 / count - 0.5) < 0.01);
    CHECK(std::abs(im2 / count - 0.5) < 0.01);
    CHECK(std::abs(cross / count) < 0.01);
}

}  // TEST_SUITE
