#pragma once

// Gauss-Legendre quadrature and Nystrom discretisation of Fredholm operators.

#include <Eigen/Dense>

#include <array>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

namespace lis {

struct QuadRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    double a = -1.0, b = 1.0;
    std::size_t size() const { return nodes.size(); }
};

QuadRule gauss_legendre(int m, double a, double b);

using RealFn = std::function<double(double)>;

/// K(x,y) = c (f(x)g(y) - g(x)f(y)) / (s(x) - s(y)); node(x) returns {f, g, s}.
struct IntegrableForm {
    std::function<std::array<double, 3>(double)> node;
    double c = 1.0;
};

struct KernelSpec {
    std::function<double(double, double)> eval;
    RealFn diag;
    double decay_scale = 0.0;  // > 0 when |K(x,y)| <= M exp(-(x+y)) is known
    bool symmetric = true;
    std::optional<IntegrableForm> integrable;  // lets the Nystrom build evaluate per node

    double operator()(double x, double y) const { return x == y ? diag(x) : eval(x, y); }
};

struct Interval {
    double a;
    double b = std::numeric_limits<double>::infinity();
};

struct NystromOptions {
    int m = 80;
    double truncation = 14.0;  // L in b = max(a,0) + L for semi-infinite intervals
};

/// Finite interval actually integrated over.
Interval effective_interval(const KernelSpec& K, Interval iv, double truncation);

/// coef * u(x) v(y)
struct RankOneTerm {
    double coef;
    RealFn u;
    RealFn v;
};
using FiniteRank = std::vector<RankOneTerm>;

/// Factorised Nystrom matrix I - sqrt(w_i w_j) K(x_i, x_j) on one interval.
class Nystrom {
  public:
    Nystrom(const KernelSpec& K, Interval iv, const NystromOptions& opt = {});

    const QuadRule& rule() const { return rule_; }
    const Eigen::MatrixXd& matrix() const { return A_; }
    double det() const { return det_; }
    double rcond() const { return rcond_; }

    /// Node values of (I-K)^{-1} g.
    std::vector<double> solve(const RealFn& g) const;
    /// <v, (I-K)^{-1} u> = tr((I-K)^{-1} u (x) v).
    double trace(const RealFn& u, const RealFn& v) const;
    /// Same with u, v given by their node values.
    double trace_nodes(const std::vector<double>& u, const std::vector<double>& v) const;
    /// Resolvent kernel R(x,y) of K(I-K)^{-1}, by Nystrom interpolation.
    double resolvent_kernel(double x, double y) const;

  private:
    void require_regular() const;
    KernelSpec K_;
    QuadRule rule_;
    std::vector<double> sw_;  // sqrt weights
    Eigen::MatrixXd A_;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
    double det_ = 0.0;
    double rcond_ = 0.0;
};

double fredholm_det(const KernelSpec& K, Interval iv, int m = 80, double truncation = 14.0);
std::vector<double> resolvent_solve(const KernelSpec& K, Interval iv, int m, const RealFn& g);
double trace_u(const KernelSpec& K, Interval iv, const RealFn& u, const RealFn& v, int m = 80);

struct PlemeljTerms {
    double d1 = 0.0, d2 = 0.0, d3 = 0.0;
};

/// Coefficients of det(I - K0 - hK1 - h^2K2 - h^3K3) = det(I-K0)(1 + d1 h + d2 h^2 + d3 h^3 + ...)
/// for finite-rank K1, K2, K3.
PlemeljTerms plemelj_corrections(const Nystrom& base, const FiniteRank& K1, const FiniteRank& K2,
                                 const FiniteRank& K3);
PlemeljTerms plemelj_corrections(const KernelSpec& K0, Interval iv, const FiniteRank& K1,
                                 const FiniteRank& K2, const FiniteRank& K3, int m = 80);

}  // namespace lis
