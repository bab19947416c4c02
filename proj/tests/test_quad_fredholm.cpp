#include "lis/errors.hpp"
#include "lis/fredholm.hpp"
#include "lis/kernels.hpp"
#include "lis/specfun.hpp"
#include "lis/tracy_widom.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace lis;

namespace {

KernelSpec zero_kernel() {
    KernelSpec k;
    k.eval = [](double, double) { return 0.0; };
    k.diag = [](double) { return 0.0; };
    return k;
}

KernelSpec rank_one(double c) {
    // c * 1 (x) 1
    KernelSpec k;
    k.eval = [c](double, double) { return c; };
    k.diag = [c](double) { return c; };
    return k;
}

}  // namespace

TEST_CASE("gauss_legendre small rules") {
    auto r1 = gauss_legendre(1, -1.0, 1.0);
    CHECK(r1.nodes[0] == doctest::Approx(0.0));
    CHECK(r1.weights[0] == doctest::Approx(2.0));

    auto r2 = gauss_legendre(2, -1.0, 1.0);
    CHECK(std::fabs(r2.nodes[0] + 1.0 / std::sqrt(3.0)) < 1e-15);
    CHECK(std::fabs(r2.nodes[1] - 1.0 / std::sqrt(3.0)) < 1e-15);
    CHECK(std::fabs(r2.weights[0] - 1.0) < 1e-15);
    CHECK(std::fabs(r2.weights[1] - 1.0) < 1e-15);

    auto r5 = gauss_legendre(5, 0.0, 1.0);
    double s = 0.0;
    for (std::size_t i = 0; i < r5.size(); ++i) s += r5.weights[i] * std::pow(r5.nodes[i], 8);
    CHECK(std::fabs(s - 1.0 / 9.0) < 1e-15);
}

TEST_CASE("gauss_legendre invariants") {
    for (int m : {3, 16, 80, 121}) {
        auto r = gauss_legendre(m, -2.0, 5.0);
        double sum = 0.0;
        for (double w : r.weights) {
            CHECK(w > 0.0);
            sum += w;
        }
        CHECK(std::fabs(sum - 7.0) <= 1e-13 * 7.0);
        for (int i = 0; i < m; ++i) {
            CHECK(r.nodes[i] > -2.0);
            CHECK(r.nodes[i] < 5.0);
            if (i > 0) CHECK(r.nodes[i] > r.nodes[i - 1]);
            CHECK(std::fabs(r.nodes[i] + r.nodes[m - 1 - i] - 3.0) < 1e-13);
        }
    }
    CHECK_THROWS_AS(gauss_legendre(0, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(gauss_legendre(4, 1.0, 1.0), DomainError);
}

TEST_CASE("fredholm_det trivial kernels") {
    CHECK(fredholm_det(zero_kernel(), {0.0, 1.0}, 7) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::fabs(fredholm_det(rank_one(1.0), {0.0, 1.0}, 20)) < 1e-13);
    CHECK(std::fabs(fredholm_det(rank_one(0.25), {0.0, 2.0}, 20) - 0.5) < 1e-13);
}

TEST_CASE("fredholm_det rejects non-finite kernels and undecaying semi-infinite intervals") {
    KernelSpec bad = zero_kernel();
    bad.eval = [](double, double) { return std::numeric_limits<double>::quiet_NaN(); };
    CHECK_THROWS_AS(fredholm_det(bad, {0.0, 1.0}, 5), NonFinite);
    CHECK_THROWS_AS(fredholm_det(zero_kernel(), {0.0}, 5), DomainError);
}

TEST_CASE("resolvent_solve and trace_u on finite-rank kernels") {
    auto g = resolvent_solve(zero_kernel(), {0.0, 1.0}, 6, [](double x) { return x * x; });
    auto r = gauss_legendre(6, 0.0, 1.0);
    for (int i = 0; i < 6; ++i) CHECK(std::fabs(g[i] - r.nodes[i] * r.nodes[i]) < 1e-15);

    // <u,u> = 0.25 * 2 = 0.5, so (I-K)^{-1} u = u / (1 - 0.5)
    auto h = resolvent_solve(rank_one(0.25), {0.0, 2.0}, 10, [](double) { return 0.5; });
    for (double v : h) CHECK(std::fabs(v - 1.0) < 1e-13);

    CHECK(std::fabs(trace_u(zero_kernel(), {0.0, 1.0}, [](double) { return 1.0; }, [](double) { return 1.0; }, 8) -
                    1.0) < 1e-14);
    CHECK_THROWS_AS(resolvent_solve(rank_one(1.0), {0.0, 1.0}, 10, [](double) { return 1.0; }), SingularSystem);
}

TEST_CASE("Airy determinant converges in m and in the truncation length") {
    auto K = airy_kernel().spec;
    for (double t : {-8.0, -4.0, 0.0, 2.0, 4.0}) {
        const double d80 = fredholm_det(K, {t}, 80), d60 = fredholm_det(K, {t}, 60), d120 = fredholm_det(K, {t}, 120);
        CHECK(std::fabs(d60 - d120) <= 1e-11);
        CHECK(std::fabs(d80 - fredholm_det(K, {t}, 80, 20.0)) <= 1e-11);
        CHECK(d80 > 0.0);
        CHECK(d80 <= 1.0);
    }
}

TEST_CASE("Airy trace u_00 is the logarithmic derivative of F") {
    auto K = airy_kernel().spec;
    RealFn ai = [](double x) { return airy(x); };
    for (double t : {-2.0, 0.0, 2.0}) {
        const double u00 = trace_u(K, {t}, ai, ai);
        CHECK(std::fabs(F(t, 1) - F(t) * u00) <= 1e-8);
    }
    RealFn ai3 = [](double x) { return airy(x, 3); };
    const double u30 = trace_u(K, {0.0}, ai3, ai);
    CHECK(std::fabs(u30 - (7.0 / 12.0 * F(0.0, 1) + F(0.0, 4) / 24.0) / F(0.0)) <= 1e-8);
    // symmetry of the bilinear form
    CHECK(std::fabs(trace_u(K, {0.5}, ai3, ai) - trace_u(K, {0.5}, ai, ai3)) <= 1e-12);
}

TEST_CASE("Plemelj corrections") {
    Nystrom base(airy_kernel().spec, {0.0});
    auto zero = plemelj_corrections(base, {}, {}, {});
    CHECK(zero.d1 == 0.0);
    CHECK(zero.d2 == 0.0);
    CHECK(zero.d3 == 0.0);
    for (double t : {-2.0, 0.0, 1.5}) {
        auto d = plemelj_corrections(airy_kernel().spec, {t}, K1_tilde_terms(), K2_tilde_terms(), {});
        CHECK(std::fabs(d.d1 + F(t, 2) / (5.0 * F(t))) <= 1e-8);
    }
}
