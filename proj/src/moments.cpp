#include "lis/moments.hpp"

#include "lis/errors.hpp"
#include "lis/expansions.hpp"
#include "lis/fredholm.hpp"
#include "lis/tracy_widom.hpp"

#include <cmath>

namespace lis {

double moment_M(int j, double a, double b) {
    if (j < 0 || j > 5) throw DomainError("moment_M: j must be in 0..5");
    const auto& m = tw_model().model();
    if (a < m.a() || b > m.b() || !(a < b)) throw DomainError("moment_M: window must lie within [-12, 8]");
    auto q = gauss_legendre(400, a, b);
    double s = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) s += q.weights[i] * std::pow(q.nodes[i], j) * m(q.nodes[i], 1);
    return s;
}

const MomentTable& moment_table() {
    static const MomentTable T = [] {
        MomentTable t;
        for (int j = 0; j <= 5; ++j) t.M[j] = moment_M(j);
        const auto& M = t.M;
        t.mu = {M[1], M[2] / 60.0, 89.0 / 350.0 - M[3] / 1400.0, 538.0 / 7875.0 * M[1] + 281.0 / 4536000.0 * M[4]};
        t.nu[0] = -M[1] * M[1] + M[2];
        t.nu[1] = -67.0 / 60.0 + (-M[1] * M[2] + M[3]) / 30.0;
        t.nu[2] = -57.0 / 175.0 * M[1] + M[1] * M[3] / 700.0 - M[2] * M[2] / 3600.0 - 29.0 / 25200.0 * M[4];
        t.nu[3] = -1076.0 / 7875.0 * M[1] * M[1] - 281.0 / 2268000.0 * M[1] * M[4] + 893.0 / 7875.0 * M[2] +
                  M[2] * M[3] / 42000.0 + 227.0 / 2268000.0 * M[5];
        return t;
    }();
    return T;
}

double coeff_mu(int j) {
    if (j < 0 || j > 3) throw DomainError("coeff_mu: j must be in 0..3");
    return moment_table().mu[j];
}

double coeff_nu(int j) {
    if (j < 0 || j > 3) throw DomainError("coeff_nu: j must be in 0..3");
    return moment_table().nu[j];
}

double mu_from_integral(int j) {
    if (j < 1 || j > 3) throw DomainError("mu_from_integral: j must be in 1..3");
    const auto& form = linear_form(Family::Fstar, j);
    auto q = gauss_legendre(400, TWModel::lo, TWModel::hi);
    double s = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) s += q.weights[i] * q.nodes[i] * form.eval(q.nodes[i]);
    return s;
}

double expected_value(int n, int m) {
    if (n < 1 || m < 0 || m > 3) throw DomainError("expected_value: need n >= 1 and m in 0..3");
    const double x = n;
    double e = 2.0 * std::sqrt(x) + 0.5;
    for (int j = 0; j <= m; ++j) e += coeff_mu(j) * std::pow(x, 1.0 / 6.0 - j / 3.0);
    return e;
}

double variance(int n, int m) {
    if (n < 1 || m < 0 || m > 3) throw DomainError("variance: need n >= 1 and m in 0..3");
    const double x = n;
    double v = 0.0;
    for (int j = 0; j <= m; ++j) v += coeff_nu(j) * std::pow(x, 1.0 / 3.0 - j / 3.0);
    return v;
}

}  // namespace lis
