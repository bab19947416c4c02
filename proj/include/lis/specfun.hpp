#pragma once

#include "lis/rational.hpp"

#include <array>
#include <vector>

namespace lis {

/// Ai^{(k)}(x) for |x| <= 200, 0 <= k <= 7.
double airy(double x, int k = 0);

/// Ai, Ai', ..., Ai^{(7)} at x in one sweep.
std::array<double, 8> airy_all(double x);

/// Ai(x) and Ai'(x).
std::array<double, 2> airy_pair(double x);

/// J_nu(x) for integer nu, by Miller's backward recurrence.
double bessel_j(int nu, double x);

struct BesselTriple {
    double jm1, j, jp1;  // J_{nu-1}, J_nu, J_{nu+1}
    double derivative() const { return 0.5 * (jm1 - jp1); }
};

/// J_{nu-1}(x), J_nu(x), J_{nu+1}(x) from a single recurrence (J_{-1} = -J_1).
BesselTriple bessel_j_triple(int nu, double x);

/// Olver transition-region polynomials A_k(tau), B_k(tau), k = 0..kmax.
struct OlverTables {
    std::vector<QPoly> A;
    std::vector<QPoly> B;
    int kmax() const { return static_cast<int>(A.size()) - 1; }
};

OlverTables olver_tables(int kmax);

/// Truncated uniform expansion of J_nu(nu + tau nu^{1/3}) through order m.
double bessel_transition(int nu, double tau, int m);

/// zeta(z) of the uniform Bessel expansion; zeta(1) = 0, decreasing.
double zeta_of_z(double z);

/// Coefficients c_k (k = 0..order) of 2^{-1/3} zeta(1-h) = sum c_k h^k, exact.
const std::vector<Rat>& zeta_series_coeffs();

}  // namespace lis
