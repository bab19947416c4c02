#pragma once

// Hayman auxiliary functions of f(z; l) = e^z P(z; l) and the Stirling-type
// approximations of P(L_n <= l).

namespace lis {

struct AuxFns {
    double P;   // P(r; l)
    double dP;  // P'(r; l)
    double a;   // r f'(r) / f(r)
    double b;   // r a'(r)
};

/// P'(r; l) from the resolvent diagonal: d/ds log det(I - K_l)|_(0,s) = -R(s, s), s = 4r.
double poisson_log_derivative(int l, double r);

/// a(r), b(r); b by a central difference of a with step max(1e-3 r, 1e-2).
AuxFns aux(int l, double r);

/// Solution of a(r) = n by safeguarded Newton iteration.
double solve_rn(int n, int l);

struct StirlingResult {
    double S, r_n, a, b;
};

/// S_{n,l} = P(r_n) / sqrt(b(r_n)/n) exp(n Lambda((r_n - n)/n)).
StirlingResult stirling_S(int n, int l, bool with_tau = false);
/// S~_{n,l} = P(n) / sqrt(b(n)/n) exp(-(n - a(n))^2 / (2 b(n))).
StirlingResult stirling_S_tilde(int n, int l, bool with_tau = false);

/// n! / (sqrt(2 pi n) (n/e)^n).
double tau_n(int n);

}  // namespace lis
