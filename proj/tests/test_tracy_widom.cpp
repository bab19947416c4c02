#include "lis/kernels.hpp"
#include "lis/specfun.hpp"
#include "lis/tracy_widom.hpp"

#include <doctest.h>

#include <cmath>

using namespace lis;

TEST_CASE("TW model limits and saturation") {
    CHECK(std::fabs(F(6.0) - 1.0) <= 1e-9);
    CHECK(F(-10.0) <= 1e-8);
    CHECK(F(10.0) == 1.0);
    CHECK(F(10.0, 1) == 0.0);
    CHECK(F(-20.0) == 0.0);
    for (double t = -10.0; t <= 6.0; t += 0.1) {
        const double f = F(t);
        CHECK(f >= -1e-12);
        CHECK(f <= 1.0 + 1e-12);
        CHECK(F(t, 1) >= -1e-10);
    }
    for (double t = 2.0; t <= 6.0; t += 0.5) CHECK(std::fabs(F(t, 1)) <= std::exp(-t));
}

TEST_CASE("TW model matches direct determinants") {
    auto K = airy_kernel().spec;
    for (double t : {-7.3, -3.1, 0.4, 2.9}) CHECK(std::fabs(F(t) - fredholm_det(K, {t})) <= 1e-11);
}

TEST_CASE("spectral derivatives agree with Richardson finite differences") {
    const double h = 1e-3;
    for (double t : {-4.0, -2.0, 0.0, 2.0}) {
        for (int k = 1; k <= 3; ++k) {
            auto d = [&](double step) {
                return (F(t + step, k - 1) - F(t - step, k - 1)) / (2.0 * step);
            };
            const double fd = (4.0 * d(h / 2) - d(h)) / 3.0;
            CHECK(std::fabs(F(t, k) - fd) <= 1e-6);
        }
    }
}

TEST_CASE("derivatives from resolvent traces") {
    for (double t : {-2.0, 0.0, 2.0}) CHECK(std::fabs(F(t, 1) - F(t) * u(t, 0, 0)) <= 1e-8);
    CHECK(std::fabs(F(0.0, 2) - 2.0 * F(0.0) * u(0.0, 1, 0)) <= 1e-8);
    CHECK(std::fabs(F(-1.0) * u(-1.0, 2, 1) - (-F(-1.0, 1) / 4.0 + F(-1.0, 4) / 8.0)) <= 1e-7);
    CHECK(std::fabs(F(1.0) * u(1.0, 3, 0) - (7.0 * F(1.0, 1) / 12.0 + F(1.0, 2) / 3.0 + F(1.0, 4) / 24.0)) <= 1e-7);
}

TEST_CASE("u_jk symmetry") {
    for (double t : {-4.0, -1.0, 1.5}) {
        AiryResolvent R(t);
        for (int j = 0; j <= 3; ++j)
            for (int k = 0; k < j; ++k) CHECK(std::fabs(R.u(j, k) - R.u(k, j)) <= 1e-10);
    }
}

TEST_CASE("Choup trace identity") {
    auto [l0, r0] = choup_trace_identity(0.0);
    CHECK(std::fabs(l0) <= 1e-8);
    CHECK(std::fabs(r0) <= 1e-8);
    for (double t : {-2.0, -5.0, 1.0, 3.0}) {
        auto [l, r] = choup_trace_identity(t);
        CHECK(std::fabs(l - r) <= 1e-7);
    }
    CHECK(std::fabs(choup_trace_identity(-2.0).first - 4.0 * F(-2.0, 1)) <= 1e-7);
    AiryResolvent R(1.0);
    const double decomposed = -2.0 * R.u(1, 0) + R.u(2, 2) - 2.0 * R.u(3, 1) + 2.0 * R.u(4, 0);
    CHECK(std::fabs(F(1.0) * decomposed - choup_trace_identity(1.0).first) <= 1e-7);
}

TEST_CASE("model chop keeps a clean tail") {
    CHECK(tw_model().model().tail_ratio() <= 1e-13);
}
