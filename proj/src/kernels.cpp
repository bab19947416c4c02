#include "lis/kernels.hpp"

#include "lis/errors.hpp"
#include "lis/specfun.hpp"

#include <cmath>
#include <string>

namespace lis {

double h_nu(double nu) { return 1.0 / (std::cbrt(2.0) * std::pow(nu, 2.0 / 3.0)); }

double phi_nu(double nu, double t) {
    double w = nu * (1.0 - h_nu(nu) * t);
    return w * w;
}

KernelSpec with_diagonal_band(KernelSpec k) {
    auto raw = k.eval;
    auto diag = k.diag;
    k.eval = [raw, diag](double x, double y) {
        if (std::fabs(x - y) >= 1e-6 * (1.0 + std::fabs(x) + std::fabs(y))) return raw(x, y);
        // K(c-d, c+d) is even in d: K(c,c) + alpha d^2
        const double c = 0.5 * (x + y), d = 0.5 * (y - x), eps = 1e-3;
        double kc = diag(c);
        double alpha = (raw(c - eps, c + eps) - kc) / (eps * eps);
        return kc + alpha * d * d;
    };
    return k;
}

NamedKernel airy_kernel() {
    KernelSpec k;
    k.eval = [](double x, double y) {
        auto a = airy_pair(x), b = airy_pair(y);
        return (a[0] * b[1] - a[1] * b[0]) / (x - y);
    };
    k.diag = [](double x) {
        auto a = airy_pair(x);
        return a[1] * a[1] - x * a[0] * a[0];
    };
    k.decay_scale = 1.0;
    k.integrable = IntegrableForm{[](double x) {
                                      auto a = airy_pair(x);
                                      return std::array<double, 3>{a[0], a[1], x};
                                  },
                                  1.0};
    return {with_diagonal_band(k), "airy"};
}

namespace {

// f = J(sqrt x), g = sqrt(x) J'(sqrt x)
std::array<double, 2> bessel_fg(int nu, double x) {
    if (x < 0.0) throw DomainError("bessel kernel: negative argument");
    double z = std::sqrt(x);
    auto t = bessel_j_triple(nu, z);
    return {t.j, z * t.derivative()};
}

double bessel_diag(int nu, double x) {
    if (x < 0.0) throw DomainError("bessel kernel: negative argument");
    if (x == 0.0) return nu == 0 ? 0.25 : 0.0;
    double z = std::sqrt(x);
    auto t = bessel_j_triple(nu, z);
    double jp = t.derivative();
    return 0.25 * (jp * jp + (1.0 - static_cast<double>(nu) * nu / x) * t.j * t.j);
}

}  // namespace

NamedKernel bessel_kernel(int nu) {
    if (nu < 1) throw DomainError("bessel_kernel: nu must be >= 1");
    KernelSpec k;
    k.eval = [nu](double x, double y) {
        auto a = bessel_fg(nu, x), b = bessel_fg(nu, y);
        return 0.5 * (a[0] * b[1] - a[1] * b[0]) / (x - y);
    };
    k.diag = [nu](double x) { return bessel_diag(nu, x); };
    k.integrable = IntegrableForm{[nu](double x) {
                                      auto a = bessel_fg(nu, x);
                                      return std::array<double, 3>{a[0], a[1], x};
                                  },
                                  0.5};
    NamedKernel nk{with_diagonal_band(k), "bessel", nu, h_nu(nu)};
    return nk;
}

NamedKernel transformed_bessel_kernel(int nu) {
    if (nu < 1) throw DomainError("transformed_bessel_kernel: nu must be >= 1");
    const double h = h_nu(nu);
    const double dnu = nu;
    auto check = [h](double x) {
        if (!(x < 1.0 / h)) throw DomainError("transformed_bessel_kernel: argument must be below 1/h");
    };
    // {sqrt|phi'| f(phi), sqrt|phi'| g(phi), phi}
    auto node = [=](double x) {
        check(x);
        double p = phi_nu(dnu, x);
        double dp = 2.0 * dnu * dnu * h * (1.0 - h * x);
        double s = std::sqrt(dp);
        auto fg = bessel_fg(nu, p);
        return std::array<double, 3>{s * fg[0], s * fg[1], p};
    };
    KernelSpec k;
    k.eval = [node](double x, double y) {
        auto a = node(x), b = node(y);
        return 0.5 * (a[0] * b[1] - a[1] * b[0]) / (a[2] - b[2]);
    };
    k.diag = [=](double x) {
        check(x);
        double dp = 2.0 * dnu * dnu * h * (1.0 - h * x);
        return dp * bessel_diag(nu, phi_nu(dnu, x));
    };
    k.integrable = IntegrableForm{node, 0.5};
    return {with_diagonal_band(k), "transformed_bessel", nu, h};
}

double K1(double x, double y) {
    auto a = airy_pair(x), b = airy_pair(y);
    return 0.1 * (-3.0 * (x * x + x * y + y * y) * a[0] * b[0] + 2.0 * (a[0] * b[1] + a[1] * b[0]) +
                  3.0 * (x + y) * a[1] * b[1]);
}

double K2(double x, double y) {
    auto a = airy_pair(x), b = airy_pair(y);
    const double x2 = x * x, y2 = y * y, x3 = x2 * x, y3 = y2 * y, x4 = x2 * x2, y4 = y2 * y2;
    double c00 = -235.0 * (x3 + y3) - 319.0 * x * y * (x + y) + 56.0;
    double c01 = 63.0 * (x4 + x3 * y - x2 * y2 - x * y3 - y4) - 55.0 * x + 239.0 * y;
    double c10 = 63.0 * (-x4 - x3 * y - x2 * y2 + x * y3 + y4) + 239.0 * x - 55.0 * y;
    double c11 = 340.0 * (x2 + y2) + 256.0 * x * y;
    return (c00 * a[0] * b[0] + c01 * a[0] * b[1] + c10 * a[1] * b[0] + c11 * a[1] * b[1]) / 1400.0;
}

double choup_L(double x, double y) {
    auto a = airy_pair(x), b = airy_pair(y);
    return (x * x + x * y + y * y) * a[0] * b[0] - (x + y) * a[1] * b[1];
}

namespace {

RealFn ai_d(int k) {
    return [k](double x) { return airy(x, k); };
}

KernelSpec from_terms(const FiniteRank& terms) {
    KernelSpec k;
    k.eval = [terms](double x, double y) {
        double s = 0.0;
        for (const auto& t : terms) s += t.coef * t.u(x) * t.v(y);
        return s;
    };
    k.diag = [terms](double x) {
        double s = 0.0;
        for (const auto& t : terms) s += t.coef * t.u(x) * t.v(x);
        return s;
    };
    k.decay_scale = 1.0;
    return k;
}

}  // namespace

FiniteRank K1_tilde_terms() { return {{0.2, ai_d(0), ai_d(1)}, {0.2, ai_d(1), ai_d(0)}}; }

FiniteRank K2_tilde_terms() {
    return {{55.0 / 350.0, ai_d(0), ai_d(3)},
            {55.0 / 350.0, ai_d(3), ai_d(0)},
            {-51.0 / 350.0, ai_d(1), ai_d(2)},
            {-51.0 / 350.0, ai_d(2), ai_d(1)},
            {-96.0 / 350.0, ai_d(0), ai_d(0)}};
}

FiniteRank choup_L_terms() {
    RealFn ai = ai_d(0), aip = ai_d(1);
    RealFn xai = [](double x) { return x * airy(x, 0); };
    RealFn x2ai = [](double x) { return x * x * airy(x, 0); };
    RealFn xaip = [](double x) { return x * airy(x, 1); };
    return {{1.0, x2ai, ai}, {1.0, xai, xai}, {1.0, ai, x2ai}, {-1.0, xaip, aip}, {-1.0, aip, xaip}};
}

NamedKernel K1_tilde() { return {from_terms(K1_tilde_terms()), "K1_tilde"}; }
NamedKernel K2_tilde() { return {from_terms(K2_tilde_terms()), "K2_tilde"}; }

ResidualGrid kernel_expansion_residual(int nu, int m, int n, double lo, double hi) {
    if (m < 0 || m > 2) throw DomainError("kernel_expansion_residual: m must be in 0..2");
    if (lo < -4.0 || hi > 4.0 || !(lo < hi) || n < 2)
        throw DomainError("kernel_expansion_residual: grid must lie within [-4,4]^2");
    auto kb = transformed_bessel_kernel(nu);
    auto k0 = airy_kernel();
    const double h = kb.h;
    ResidualGrid g;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double x = lo + (hi - lo) * i / (n - 1), y = lo + (hi - lo) * j / (n - 1);
            double approx = k0.spec(x, y);
            if (m >= 1) approx += h * K1(x, y);
            if (m >= 2) approx += h * h * K2(x, y);
            double r = kb.spec(x, y) - approx;
            g.x.push_back(x);
            g.y.push_back(y);
            g.residual.push_back(r);
            g.max_abs = std::max(g.max_abs, std::fabs(r));
        }
    }
    return g;
}

}  // namespace lis
