#include "lis/depoisson.hpp"

#include "lis/errors.hpp"
#include "lis/exact_lis.hpp"
#include "lis/expansions.hpp"
#include "lis/stirling.hpp"

#include <cmath>
#include <complex>

namespace lis {

QPoly charlier_b_poly(int j) {
    if (j < 0) throw DomainError("charlier_b: j must be nonnegative");
    // (k+1) b_{k+1} + k b_k + n b_{k-1} = 0
    QPoly prev(Rat(1)), cur;  // b_0, b_1
    if (j == 0) return prev;
    const QPoly n = QPoly::variable();
    for (int k = 1; k < j; ++k) {
        QPoly next = (Rat(-k) * cur - n * prev) * Rat(1, k + 1);
        prev = cur;
        cur = next;
    }
    return cur;
}

Rat charlier_b(int j, const Rat& n) { return charlier_b_poly(j).eval(n); }

double charlier_c(int j, double n, double r) {
    if (j < 0) throw DomainError("charlier_c: j must be nonnegative");
    double prev = 1.0, cur = n - r;
    if (j == 0) return prev;
    for (int k = 1; k < j; ++k) {
        double next = -((k + r - n) * cur + r * prev) / (k + 1);
        prev = cur;
        cur = next;
    }
    return cur;
}

ChebModel poisson_model(int n, int l, int npts) {
    if (n < 1) throw DomainError("poisson_model: n must be positive");
    const double w = 4.0 * std::sqrt(static_cast<double>(n));
    const double a = std::max(n - w, 0.0), b = n + w;
    return ChebModel::fit([l](double r) { return e2_hard(4.0 * r, l); }, a, b, npts, 8);
}

double jasz(const ChebModel& P, int n, int M) {
    if (M < 0 || M > 8) throw DomainError("jasz: M must be in 0..8");
    const double w = 4.0 * std::sqrt(static_cast<double>(n));
    if (P.a() > std::max(n - w, 0.0) + 1e-9 || P.b() < n + w - 1e-9)
        throw DomainError("jasz: model does not cover [n - 4 sqrt n, n + 4 sqrt n]");
    double s = P(n);
    for (int j = 2; j <= M; ++j) s += charlier_b(j, Rat(n)).get_d() * P(n, j);
    return s;
}

double jasz_p4(const ChebModel& P, int n) {
    const double x = n;
    return P(x) - 0.5 * x * P(x, 2) + 0.125 * x * x * P(x, 4);
}

Sandwich johansson_sandwich(int n, double s, int l) {
    if (n < 2 || !(s >= 1.0)) throw DomainError("johansson_sandwich: need n >= 2 and s >= 1");
    const double d = 2.0 * std::sqrt(s * n * std::log(static_cast<double>(n)));
    const double eps = std::pow(static_cast<double>(n), -s);
    Sandwich out;
    out.lower = e2_hard(4.0 * (n + d), l) - eps;
    out.upper = e2_hard(4.0 * std::max(n - d, 0.0), l) + eps;
    out.exact = exact_dist(n).cdf_double(l);
    out.holds = out.lower <= out.exact && out.exact <= out.upper;
    return out;
}

HaymanReport hayman_bound_check(int l, double r, const std::vector<double>& thetas) {
    if (!(r > 0.0 && r <= 25.0)) throw DomainError("hayman_bound_check: r must lie in (0, 25]");
    HaymanReport rep;
    rep.l = l;
    rep.r = r;
    rep.b = aux(l, r).b;
    rep.f_r = egf(l, r).real();
    for (double th : thetas) {
        HaymanRow row;
        row.theta = th;
        row.lhs = std::abs(egf(l, std::polar(r, th)));
        row.rhs = 2.0 * rep.f_r * std::exp(-0.5 * std::min(th * th * rep.b, std::pow(rep.b, 0.2)));
        row.pass = row.lhs <= row.rhs;
        rep.all_pass = rep.all_pass && row.pass;
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace lis
