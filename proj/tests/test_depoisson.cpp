#include "lis/depoisson.hpp"
#include "lis/errors.hpp"
#include "lis/exact_lis.hpp"
#include "lis/expansions.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace lis;

TEST_CASE("diagonal Poisson-Charlier polynomials") {
    const QPoly n = QPoly::variable();
    CHECK(charlier_b_poly(0) == QPoly(Rat(1)));
    CHECK(charlier_b_poly(1).is_zero());
    CHECK(charlier_b_poly(2) == Rat(-1, 2) * n);
    CHECK(charlier_b_poly(3) == Rat(1, 3) * n);
    CHECK(charlier_b_poly(6) == QPoly::monomial(Rat(-1, 48), 3) + QPoly::monomial(Rat(13, 72), 2) +
                                    QPoly::monomial(Rat(-1, 6), 1));
    for (int j = 1; j <= 12; ++j) {
        CHECK(charlier_b(j, Rat(0)) == 0);
        CHECK(charlier_b_poly(j).degree() <= j / 2);
    }
    CHECK(charlier_b(4, Rat(50)) == Rat(50 * 50) / 8 - Rat(50) / 4);
}

TEST_CASE("Charlier c_j on the diagonal and orthogonality") {
    CHECK(charlier_c(0, 7.0, 3.0) == 1.0);
    CHECK(charlier_c(1, 7.0, 3.0) == 4.0);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        const int n = 1 + static_cast<int>(rng() % 100);
        for (int j = 0; j <= 10; ++j) {
            const double b = charlier_b(j, Rat(n)).get_d();
            CHECK(std::fabs(charlier_c(j, n, n) - b) <= 1e-9 * (1.0 + std::fabs(b)));
        }
    }
    const double r = 3.0;
    double s = 0.0, w = std::exp(-r);
    for (int n = 0; n <= 60; ++n) {
        s += charlier_c(1, n, r) * charlier_c(2, n, r) * w;
        w *= r / (n + 1);
    }
    CHECK(std::fabs(s) <= 1e-10);
}

TEST_CASE("Jasz expansion") {
    const int n = 50;
    const auto d = exact_dist(n);
    const int l = d.mode();
    const auto P = poisson_model(n, l);
    CHECK(jasz(P, n, 0) == doctest::Approx(P(n)).epsilon(1e-15));
    CHECK(std::fabs(P(n) - e2_hard(4.0 * n, l)) <= 1e-10);
    const double ex = d.cdf_double(l);
    const double e0 = std::fabs(jasz(P, n, 0) - ex), e2 = std::fabs(jasz(P, n, 2) - ex);
    CHECK(e2 < e0);
    // the reduced form drops b_3 P''' and the linear part of b_4 P''''
    const double full = jasz(P, n, 4);
    const double dropped = n / 3.0 * P(n, 3) - n / 4.0 * P(n, 4);
    CHECK(std::fabs(full - dropped - jasz_p4(P, n)) <= 1e-12);
    CHECK_THROWS_AS(jasz(poisson_model(20, l), n, 4), DomainError);
    CHECK_THROWS_AS(jasz(P, n, 9), DomainError);
}

TEST_CASE("Johansson sandwich") {
    for (int n : {20, 40, 60}) {
        const int mode = exact_dist(n).mode();
        for (int l = mode - 2; l <= mode + 2; ++l) {
            const auto s = johansson_sandwich(n, 1.0, l);
            CHECK(s.holds);
            CHECK(s.lower <= s.exact);
            CHECK(s.exact <= s.upper);
        }
    }
    const auto deg = johansson_sandwich(20, 1.0, 25);
    CHECK(deg.exact == 1.0);
    CHECK(deg.holds);
    const auto small = johansson_sandwich(2, 1.0, 1);
    CHECK(small.exact == 0.5);
    CHECK(small.holds);
}

TEST_CASE("Hayman bound") {
    const auto rep = hayman_bound_check(8, 16.0, {0.0, 0.5, 1.0, 2.0, M_PI});
    CHECK(rep.rows.size() == 5);
    CHECK(rep.rows[0].pass);
    CHECK(std::fabs(rep.rows[0].lhs - rep.f_r) <= 1e-10 * rep.f_r);
    CHECK(rep.b > 0.0);
    CHECK_THROWS_AS(hayman_bound_check(8, 40.0, {0.0}), DomainError);
}
