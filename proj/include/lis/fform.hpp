#pragma once

// Exact algebra in Q[s][q, q'] with q the Hastings-McLeod solution of
// q'' = s q + 2 q^3, and linear F-forms sum_k p_k(s) F^{(k)}(s) / F(s).

#include "lis/rational.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace lis {

/// Graded lexicographic order on (alpha, beta) for q^alpha q'^beta.
struct MonomialLess {
    bool operator()(const std::pair<int, int>& a, const std::pair<int, int>& b) const {
        const int da = a.first + a.second, db = b.first + b.second;
        if (da != db) return da < db;
        return a.first < b.first;
    }
};

class QQPoly {
  public:
    using Key = std::pair<int, int>;  // (power of q, power of q')
    using Terms = std::map<Key, QPoly, MonomialLess>;

    QQPoly() = default;
    QQPoly(const QPoly& c);  // c(s) * q^0 q'^0
    QQPoly(const Rat& c) : QQPoly(QPoly(c)) {}
    static QQPoly monomial(const QPoly& c, int alpha, int beta);
    static QQPoly q() { return monomial(QPoly(Rat(1)), 1, 0); }
    static QQPoly dq() { return monomial(QPoly(Rat(1)), 0, 1); }
    static QQPoly s() { return QQPoly(QPoly::variable()); }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    QPoly coeff(int alpha, int beta) const;
    /// Largest alpha + beta; -1 for zero.
    int deg_q() const;

    double eval(double s, double q, double dq) const;
    std::string str() const;

    QQPoly operator-() const;
    QQPoly& operator+=(const QQPoly& o);
    QQPoly& operator-=(const QQPoly& o);
    friend QQPoly operator+(QQPoly a, const QQPoly& b) { return a += b; }
    friend QQPoly operator-(QQPoly a, const QQPoly& b) { return a -= b; }
    friend QQPoly operator*(const QQPoly& a, const QQPoly& b);
    friend bool operator==(const QQPoly& a, const QQPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const QQPoly& a, const QQPoly& b) { return !(a == b); }

  private:
    void add(const Key& k, const QPoly& c);
    Terms t_;
};

/// d/ds with q'' replaced by s q + 2 q^3.
QQPoly pii_diff(const QQPoly& T);

/// F^{(n)}/F as an element of Q[s][q, q'] (n = 0 gives 1); n <= 24.
const QQPoly& F_over_F(int n);

/// sum_{k=1}^{n} p_k F^{(k)}/F
struct FForm {
    std::vector<QPoly> p;  // p[k-1] multiplies F^{(k)}/F

    int order() const { return static_cast<int>(p.size()); }
    QQPoly expand() const;
    /// Value from F^{(k)}/F at t, supplied by the caller.
    double eval(double t, const std::vector<double>& f_ratio) const;
    /// "p1*D + p2*D^2 + ..." with each p_k as "(c0 + c1*s + ...)"; zero terms omitted.
    std::string str() const;
    friend bool operator==(const FForm& a, const FForm& b) { return a.p == b.p; }
};

enum class Verdict { Solved, Inconsistent, NonPolynomial, DerivativeMismatch };
std::string verdict_name(Verdict v);

struct LFormResult {
    Verdict verdict = Verdict::Inconsistent;
    FForm form;          // valid when verdict == Solved
    std::string detail;  // explanation for the failure verdicts
    int rows = 0;        // size of the linear system
    int cols = 0;
    bool ok() const { return verdict == Verdict::Solved; }
};

/// Solve T' = sum_k (r_k F^{(k)}/F + p_k (F^{(k)}/F)') for (p, r) over Q(s), then require
/// polynomial entries and r_k = p_k'.
LFormResult lform_solve(const QQPoly& T_prime, int n);
/// Solve T = sum_k p_k F^{(k)}/F directly.
LFormResult lform_solve_direct(const QQPoly& T, int n);

/// q_n in Q[s][q, q'] from the extended Tracy-Widom recursion.
QQPoly st_q(int n);
/// u_jk' = -q_j q_k
QQPoly st_u_prime(int j, int k);
/// F-form of u_jk, found at order j + k + 1. Throws NoConvergence when no form exists.
FForm st_u(int j, int k);
/// u_jk expanded in Q[s][q, q'].
QQPoly st_u_poly(int j, int k);

/// All u_jk with j + k <= max_sum (both index orders); max_sum <= 10.
std::map<std::pair<int, int>, FForm> st_table(int max_sum);

/// det(u_{rows[a], cols[b]}) in Q[s][q, q'].
QQPoly minor_poly(const std::vector<int>& rows, const std::vector<int>& cols);
/// Attempt at the order sum(rows) + sum(cols) + size.
LFormResult minor_fform(const std::vector<int>& rows, const std::vector<int>& cols);

/// Numeric values of F^{(k)}/F for k = 0..n at t. Orders up to 7 come from the
/// Tracy-Widom model; higher orders evaluate F_over_F at q(t), q'(t) from the resolvent.
std::vector<double> f_ratios(double t, int n);
/// q(t) and q'(t) from the Airy resolvent.
std::pair<double, double> hastings_mcleod(double t);

/// max_t |sum_k p_k(t) F^{(k)}(t)/F(t) - target(t)|
double numeric_crosscheck(const FForm& form, const std::function<double(double)>& target,
                          const std::vector<double>& ts);
/// Cross-check of u_jk's F-form against the resolvent trace; j, k <= 10.
double crosscheck_u(int j, int k, const std::vector<double>& ts);
/// Cross-check of a minor's F-form against the determinant of resolvent traces.
double crosscheck_minor(const std::vector<int>& rows, const std::vector<int>& cols, const FForm& form,
                        const std::vector<double>& ts);

}  // namespace lis
