#include "lis/errors.hpp"
#include "lis/specfun.hpp"

#include <doctest.h>

#include <cmath>

using namespace lis;

TEST_CASE("airy values") {
    CHECK(std::fabs(airy(0.0) - 0.35502805388781723926) < 1e-15);
    CHECK(airy(0.0, 2) == 0.0);
    CHECK(std::fabs(airy(-2.338107410459767)) < 1e-10);
    CHECK(std::fabs(airy(0.0, 1) + 0.25881940379280679840) < 1e-15);
    CHECK_THROWS_AS(airy(250.0), DomainError);
    CHECK_THROWS_AS(airy(0.0, 8), DomainError);
}

TEST_CASE("airy ODE residual and seams") {
    for (double x = -10.0; x <= 10.0; x += 0.25) {
        const double a = airy(x);
        CHECK(std::fabs(airy(x, 2) - x * a) <= 1e-11 * (1.0 + std::fabs(x * a)));
    }
    for (double x : {-6.0, 6.0}) {
        CHECK(std::fabs(airy(x + 1e-12) - airy(x - 1e-12)) <= 1e-11);
        CHECK(std::fabs(airy(x + 1e-12, 1) - airy(x - 1e-12, 1)) <= 1e-11);
    }
    const auto all = airy_all(1.3);
    for (int k = 0; k < 8; ++k) CHECK(all[k] == doctest::Approx(airy(1.3, k)).epsilon(1e-13));
}

TEST_CASE("bessel_j values") {
    CHECK(bessel_j(0, 0.0) == 1.0);
    CHECK(bessel_j(1, 0.0) == 0.0);
    CHECK(std::fabs(bessel_j(0, 1.0) - 0.76519768655796655145) < 1e-14);
    const double lead = std::cbrt(2.0) * std::pow(100.0, -1.0 / 3.0) * airy(0.0);
    CHECK(std::fabs(bessel_j(100, 100.0) - lead) <= 3e-3);
    CHECK_THROWS_AS(bessel_j(-1, 1.0), DomainError);
    CHECK_THROWS_AS(bessel_j(2, -1.0), DomainError);
}

TEST_CASE("bessel_j recurrence and normalization") {
    for (int nu : {1, 5, 30, 100}) {
        for (double x : {0.5, 3.0, 20.0, 110.0}) {
            const auto t = bessel_j_triple(nu, x);
            const double scale = std::max({std::fabs(t.jm1), std::fabs(t.j), std::fabs(t.jp1)});
            CHECK(std::fabs(t.jm1 + t.jp1 - 2.0 * nu / x * t.j) <= 1e-10 * scale);
        }
    }
    for (double x : {0.7, 9.0, 40.0}) {
        double s = bessel_j(0, x);
        for (int k = 1; 2 * k <= 2 * static_cast<int>(x) + 80; ++k) s += 2.0 * bessel_j(2 * k, x);
        CHECK(std::fabs(s - 1.0) <= 1e-12);
    }
}

TEST_CASE("olver tables") {
    const auto T = olver_tables(6);
    CHECK(T.kmax() == 6);
    CHECK(T.A[0] == QPoly(Rat(1)));
    CHECK(T.B[0].is_zero());
    CHECK(T.A[1] == QPoly::monomial(Rat(-1, 5), 1));
    CHECK(T.B[1] == QPoly::monomial(Rat(3, 10), 2));
    CHECK(T.A[2] == QPoly::monomial(Rat(-9, 100), 5) + QPoly::monomial(Rat(3, 35), 2));
    for (int k = 1; k <= 6; ++k) {
        CHECK(T.A[k].degree() % 5 == (k % 2 ? 1 : 0));
        const int dA = T.A[k].degree(), dB = T.B[k].degree();
        CHECK((dB % 5 == 2 || dB % 5 == 3));
        for (int m = 0; m <= dA; ++m)
            if ((dA - m) % 3 != 0) CHECK(T.A[k].coeff(m) == 0);
        for (int m = 0; m <= dB; ++m)
            if ((dB - m) % 3 != 0) CHECK(T.B[k].coeff(m) == 0);
    }
}

TEST_CASE("bessel_transition") {
    const double lead = std::cbrt(2.0) * std::pow(100.0, -1.0 / 3.0) * airy(0.0);
    CHECK(bessel_transition(100, 0.0, 0) == doctest::Approx(lead).epsilon(1e-14));
    const double x = 100.0 + std::cbrt(100.0);
    CHECK(std::fabs(bessel_transition(100, 1.0, 3) - bessel_j(100, x)) <= 10.0 * std::pow(100.0, -3.0));
    auto err = [](int nu) {
        return std::fabs(bessel_transition(nu, 0.5, 1) - bessel_j(nu, nu + 0.5 * std::cbrt(double(nu))));
    };
    const double ratio = err(800) / err(100), theory = std::pow(8.0, -5.0 / 3.0);
    CHECK(ratio > theory / 3.0);
    CHECK(ratio < theory * 3.0);
    CHECK_THROWS_AS(bessel_transition(100, -30.0, 1), DomainError);
}

TEST_CASE("zeta map") {
    CHECK(zeta_of_z(1.0) == 0.0);
    const double h = 1e-3;
    CHECK(std::fabs(std::cbrt(0.5) * zeta_of_z(1.0 - h) - (h + 0.3 * h * h + 32.0 / 175.0 * h * h * h)) <= 1e-12);
    CHECK(zeta_of_z(0.5) > 0.0);
    CHECK(zeta_of_z(2.0) < 0.0);
    double prev = zeta_of_z(0.05);
    for (double z = 0.1; z < 4.0; z += 0.05) {
        const double v = zeta_of_z(z);
        CHECK(v < prev);
        prev = v;
    }
    const auto& c = zeta_series_coeffs();
    CHECK(c[1] == 1);
    CHECK(c[2] == Rat(3, 10));
    CHECK(c[3] == Rat(32, 175));
    CHECK_THROWS_AS(zeta_of_z(0.0), DomainError);
}
