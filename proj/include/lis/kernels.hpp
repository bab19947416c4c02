#pragma once

#include "lis/fredholm.hpp"

#include <string>
#include <vector>

namespace lis {

struct NamedKernel {
    KernelSpec spec;
    std::string name;
    int nu = 0;      // Bessel order where applicable
    double h = 0.0;  // h_nu where applicable
};

/// h_nu = 2^{-1/3} nu^{-2/3}
double h_nu(double nu);
/// phi_nu(t) = nu^2 (1 - h_nu t)^2
double phi_nu(double nu, double t);

NamedKernel airy_kernel();
NamedKernel bessel_kernel(int nu);
NamedKernel transformed_bessel_kernel(int nu);

double K1(double x, double y);
double K2(double x, double y);
double choup_L(double x, double y);

NamedKernel K1_tilde();
NamedKernel K2_tilde();

/// Rank-one decompositions (coef * u(x) v(y)) for the resolvent-trace machinery.
FiniteRank K1_tilde_terms();
FiniteRank K2_tilde_terms();
FiniteRank choup_L_terms();

/// Wrap a symmetric kernel so that arguments closer than 1e-6 (1 + |x| + |y|)
/// use the diagonal plus a quadratic correction.
KernelSpec with_diagonal_band(KernelSpec k);

struct ResidualGrid {
    std::vector<double> x, y, residual;  // flattened grid
    double max_abs = 0.0;
};

/// max |K_hat_nu - sum_{j<=m} h^j K_j| over an n x n uniform grid on [lo,hi]^2.
ResidualGrid kernel_expansion_residual(int nu, int m, int n = 9, double lo = -4.0, double hi = 4.0);

}  // namespace lis
