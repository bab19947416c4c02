#pragma once

// Tracy-Widom moments and the expansion coefficients of E(L_n) and Var(L_n).

#include <array>

namespace lis {

/// M_j = int t^j F'(t) dt over [a, b] by 400-point Gauss-Legendre; [a, b] within [-12, 8].
double moment_M(int j, double a = -10.0, double b = 6.0);

struct MomentTable {
    std::array<double, 6> M{};
    std::array<double, 4> mu{};
    std::array<double, 4> nu{};
};

/// Built once from the default TW model.
const MomentTable& moment_table();

double coeff_mu(int j);
double coeff_nu(int j);

/// int t F^*_j(t) dt over [-10, 6].
double mu_from_integral(int j);

/// 2 sqrt n + 1/2 + sum_{j<=m} mu_j n^{1/6 - j/3}
double expected_value(int n, int m);
/// sum_{j<=m} nu_j n^{1/3 - j/3}
double variance(int n, int m);

}  // namespace lis
