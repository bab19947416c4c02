#pragma once

// Poisson-Charlier coefficients, the Jasz expansion, Johansson's sandwich and
// the genus-zero growth bound on the exponential generating function.

#include "lis/chebyshev.hpp"
#include "lis/rational.hpp"

#include <vector>

namespace lis {

/// Diagonal Poisson-Charlier polynomial b_j as a polynomial in n.
QPoly charlier_b_poly(int j);
/// b_j(n), exact.
Rat charlier_b(int j, const Rat& n);
/// c_j(n; r) from the three-term recurrence.
double charlier_c(int j, double n, double r);

/// Chebyshev model of r -> P(r; l) = E2hard(4r; l) on [n - 4 sqrt n, n + 4 sqrt n].
ChebModel poisson_model(int n, int l, int npts = 41);

/// P(n) + sum_{j=2..M} b_j(n) P^{(j)}(n), M <= 8.
double jasz(const ChebModel& P, int n, int M);
/// P(n) - (n/2) P''(n) + (n^2/8) P''''(n).
double jasz_p4(const ChebModel& P, int n);

struct Sandwich {
    double lower, upper, exact;
    bool holds;
};

/// P(n + d) - n^{-s} <= P(L_n <= l) <= P(n - d) + n^{-s}, d = 2 sqrt(s n log n).
Sandwich johansson_sandwich(int n, double s, int l);

struct HaymanRow {
    double theta, lhs, rhs;
    bool pass;
};

struct HaymanReport {
    int l = 0;
    double r = 0.0, b = 0.0, f_r = 0.0;
    std::vector<HaymanRow> rows;
    bool all_pass = true;
};

/// |f(r e^{i theta})| <= 2 f(r) exp(-min(theta^2 b(r), b(r)^{1/5}) / 2) on the given grid.
HaymanReport hayman_bound_check(int l, double r, const std::vector<double>& thetas);

}  // namespace lis
