#include "lis/stirling.hpp"

#include "lis/errors.hpp"
#include "lis/expansions.hpp"
#include "lis/fredholm.hpp"
#include "lis/kernels.hpp"
#include "lis/tracy_widom.hpp"

#include <cmath>
#include <numbers>

namespace lis {

namespace {

struct Eval {
    double P, logdP;  // P and P'/P
};

Eval evaluate(int l, double r) {
    if (!(r > 0.0)) throw DomainError("aux: r must be positive");
    const double s = 4.0 * r;
    const auto K = bessel_kernel(l);
    const double h = K.h;
    const double t = (1.0 - std::sqrt(s) / l) / h;
    const double top = std::max(t, 0.0) + 14.0;
    const double lower = top < 1.0 / h ? phi_nu(l, top) : 0.0;
    if (!(lower < s)) return {1.0, 0.0};
    Nystrom sys(K.spec, {lower, s});
    return {sys.det(), -4.0 * sys.resolvent_kernel(s, s)};
}

double a_of(int l, double r) { return r * (1.0 + evaluate(l, r).logdP); }

}  // namespace

double poisson_log_derivative(int l, double r) { return evaluate(l, r).logdP; }

AuxFns aux(int l, double r) {
    auto e = evaluate(l, r);
    AuxFns out;
    out.P = e.P;
    out.dP = e.P * e.logdP;
    out.a = r * (1.0 + e.logdP);
    const double step = std::min(std::max(1e-3 * r, 1e-2), 0.5 * r);
    out.b = r * (a_of(l, r + step) - a_of(l, r - step)) / (2.0 * step);
    return out;
}

double solve_rn(int n, int l) {
    if (n < 1) throw DomainError("solve_rn: n must be positive");
    if (l >= n) return n;
    const double t = t_nu(l, n);
    if (!(t >= -8.0 && t <= 4.0)) throw DomainError("solve_rn: t_l(n) must lie in [-8, 4]");
    // P is nonincreasing in r, so a(r) <= r and the root lies in [n, inf)
    double lo = n, hi = 2.0 * n;
    for (int k = 0; k < 12 && a_of(l, hi) < n; ++k) {
        lo = hi;
        hi *= 2.0;
    }
    double r = n + F(t, 1) / F(t) * std::cbrt(static_cast<double>(n));
    if (!(r > lo && r < hi)) r = 0.5 * (lo + hi);
    for (int it = 0; it < 50; ++it) {
        auto A = aux(l, r);
        const double g = A.a - n;
        if (std::fabs(g) <= 1e-8 * n) return r;
        if (g > 0)
            hi = std::min(hi, r);
        else
            lo = std::max(lo, r);
        double next = r - g * r / A.b;
        if (!(next > lo && next < hi) || !(A.b > 0)) next = 0.5 * (lo + hi);
        r = next;
    }
    throw NoConvergence("solve_rn: no convergence after 50 iterations");
}

double tau_n(int n) {
    if (n < 1) throw DomainError("tau_n: n must be positive");
    const double x = n;
    return std::exp(std::lgamma(x + 1.0) - 0.5 * std::log(2.0 * std::numbers::pi * x) - x * std::log(x) + x);
}

StirlingResult stirling_S(int n, int l, bool with_tau) {
    StirlingResult out;
    out.r_n = solve_rn(n, l);
    auto A = aux(l, out.r_n);
    out.a = A.a;
    out.b = A.b;
    const double h = (out.r_n - n) / n;
    out.S = A.P / std::sqrt(A.b / n) * std::exp(n * (h - std::log1p(h)));
    if (with_tau) out.S *= tau_n(n);
    return out;
}

StirlingResult stirling_S_tilde(int n, int l, bool with_tau) {
    if (n < 1) throw DomainError("stirling_S_tilde: n must be positive");
    StirlingResult out;
    out.r_n = n;
    auto A = aux(l, n);
    out.a = A.a;
    out.b = A.b;
    const double d = n - A.a;
    out.S = A.P / std::sqrt(A.b / n) * std::exp(-d * d / (2.0 * A.b));
    if (with_tau) out.S *= tau_n(n);
    return out;
}

}  // namespace lis
