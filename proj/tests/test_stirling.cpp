#include "lis/exact_lis.hpp"
#include "lis/expansions.hpp"
#include "lis/stirling.hpp"
#include "lis/tracy_widom.hpp"

#include <doctest.h>

#include <cmath>

using namespace lis;

TEST_CASE("auxiliary functions") {
    const auto big = aux(200, 30.0);
    CHECK(std::fabs(big.a - 30.0) <= 1e-10);
    CHECK(std::fabs(big.b - 30.0) <= 1e-10);
    for (double r : {100.0, 400.0}) {
        const int l = static_cast<int>(std::lround(2.0 * std::sqrt(r)));
        const auto x = aux(l, r);
        CHECK(std::fabs(x.a - r) <= 5.0 * std::cbrt(r));
        CHECK(std::fabs(x.b - r) <= 5.0 * std::pow(r, 2.0 / 3.0));
        CHECK(x.b > 0.0);
        CHECK(aux(l, r + 1.0).a > x.a);
    }
    // the mode of L_100 is near 2 sqrt r + M_1 r^{1/6}
    const double r = 100.0;
    const int lm = 16;
    const double tm = t_nu(lm, r);
    const double predicted = -(F(tm, 1) / F(tm)) * std::cbrt(r);
    const auto x = aux(lm, r);
    CHECK(std::fabs((x.a - r) - predicted) <= 0.3 * std::fabs(predicted));
}

TEST_CASE("log-derivative from the resolvent diagonal") {
    const int l = 10;
    const double r = 25.0, h = 1e-3;
    const double fd = (e2_hard(4.0 * (r + h), l) - e2_hard(4.0 * (r - h), l)) / (2.0 * h);
    CHECK(std::fabs(poisson_log_derivative(l, r) - fd / e2_hard(4.0 * r, l)) <= 1e-6);
}

TEST_CASE("saddle-point solver") {
    CHECK(solve_rn(40, 300) == 40.0);
    for (int n : {30, 60, 100}) {
        const int l = static_cast<int>(std::lround(2.0 * std::sqrt(double(n))));
        const double rn = solve_rn(n, l);
        CHECK(std::fabs(aux(l, rn).a - n) <= 1e-8 * n);
        const double t = t_nu(l, n);
        CHECK(std::fabs(rn - n - F(t, 1) / F(t) * std::cbrt(double(n))) <= 20.0);
    }
}

TEST_CASE("Stirling-type formulas") {
    CHECK(std::fabs(stirling_S(40, 300).S - 1.0) <= 1e-8);
    CHECK(std::fabs(stirling_S_tilde(40, 300).S - 1.0) <= 1e-8);
    const int n = 60;
    const auto d = exact_dist(n);
    const int l = d.mode();
    const double t = t_nu(l, n);
    const double res = d.cdf_double(l) - stirling_S(n, l).S - coeff(Family::FS, 2, t) * std::pow(n, -2.0 / 3.0);
    CHECK(std::fabs(res) <= 0.5 / n);
    const double res_t =
        d.cdf_double(l) - stirling_S_tilde(n, l).S - coeff(Family::FS_tilde, 2, t) * std::pow(n, -2.0 / 3.0);
    CHECK(std::fabs(res_t) <= 0.5 / n);
    CHECK(stirling_S(n, l, true).S == doctest::Approx(tau_n(n) * stirling_S(n, l).S));
}

TEST_CASE("Stirling factor") {
    CHECK(tau_n(1) == doctest::Approx(std::exp(1.0) / std::sqrt(2.0 * M_PI)).epsilon(1e-14));
    CHECK(std::fabs(tau_n(100) - 1.0 - 1.0 / 1200.0) <= 1e-6);
    for (int n = 1; n < 50; ++n) CHECK(tau_n(n + 1) < tau_n(n));
}
