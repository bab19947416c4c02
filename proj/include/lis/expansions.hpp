#pragma once

// Scalings, expansion-coefficient families and the residual validators for the
// hard-to-soft, Poissonized and de-Poissonized expansions.

#include "lis/rational.hpp"

#include <string>
#include <vector>

namespace lis {

// ---- scalings ----------------------------------------------------------------

/// t_nu(r) = (nu - 2 sqrt r) / r^{1/6}
double t_nu(double nu, double r);
/// d/dr t_nu(r) = -r^{-2/3} - t_nu(r) / (6 r)
double t_nu_prime(double nu, double r);
/// 2^{-1/3} h^{-1} zeta(1 - h t), for t < 1/h
double psi_h_inverse(double h, double t);
/// (floor(2 sqrt r + t r^{1/6}) - 2 sqrt r) / r^{1/6}
double t_bracket(double r, double t);

// ---- hard-edge probability ---------------------------------------------------

/// E2hard(s; nu) = det(I - K_nu) on L^2(0, s).
double e2_hard(double s, int nu, int m = 80);

// ---- coefficient families ----------------------------------------------------

enum class Family { F, F_tilde, FP, FD, Fstar, FS, FS_tilde };

Family parse_family(const std::string& name);
std::string family_name(Family f);

/// sum_k p_k(t) F^{(k)}(t) with exact rational polynomial coefficients.
struct LinearForm {
    std::vector<QPoly> p;  // p[k] multiplies F^{(k)}

    LinearForm derivative() const;
    double eval(double t) const;  // against the default TW model
    std::string str() const;
    friend LinearForm operator+(const LinearForm& a, const LinearForm& b);
    friend LinearForm operator*(const Rat& c, const LinearForm& a);
    friend LinearForm operator*(const QPoly& c, const LinearForm& a);
    friend bool operator==(const LinearForm& a, const LinearForm& b);
};

/// Stored form of family f at order j (j = 0..3); FS families have no linear form.
const LinearForm& linear_form(Family f, int j);

/// Coefficient function of family f at order j evaluated at t (j <= 3; j = 2 for FS families).
double coeff(Family f, int j, double t);

struct RelationReport {
    std::vector<std::string> names;
    std::vector<double> mismatch;
    double max_mismatch = 0.0;
};

/// Evaluates the four identities linking F_1, F_tilde_1, F^P and F^D at t; throws
/// ToleranceExceeded naming the first identity off by more than tol.
RelationReport relation_checks(double t, double tol = 1e-10);

// ---- residual validators -----------------------------------------------------

/// h^{-m} (E2hard(phi_nu(t); nu) - sum_{j<m} F_j(t) h^j), h = h_nu.
double hard_to_soft_residual(int nu, double t, int m);

/// r^{m/3} (E2hard(4r; l) - sum_{j<m} F^P_j(t) r^{-j/3}) at t = t_l(r).
double poissonized_residual(double r, int l, int m);

/// Same at the Gauss-bracket argument t^{(r)} evaluated for the continuous t.
double poissonized_residual_bracket(double r, double t, int m);

/// F(t) + sum_{j=1..m} F^D_j(t) n^{-j/3} at t = t_l(n).
double cdf_expansion(int n, int l, int m);

/// n^{-1/6} (F'(t) + sum_{j=1..m} F^*_j(t) n^{-j/3}) at t = t_{l-1/2}(n).
double pdf_expansion(int n, int l, int m);

}  // namespace lis
