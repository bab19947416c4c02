#pragma once

#include <functional>
#include <vector>

namespace lis {

/// Chebyshev interpolant on [a,b] with derivative coefficients up to deriv_limit.
class ChebModel {
  public:
    ChebModel() = default;

    /// Interpolate f at n Chebyshev extreme points of [a,b]; chop drops the rounding plateau.
    static ChebModel fit(const std::function<double(double)>& f, double a, double b, int n, int deriv_limit = 7,
                         bool chop = true);
    /// Build from samples at the points returned by points(n, a, b).
    static ChebModel from_samples(const std::vector<double>& values, double a, double b, int deriv_limit = 7,
                                  bool chop = true);
    static std::vector<double> points(int n, double a, double b);

    double operator()(double x, int k = 0) const;
    double a() const { return a_; }
    double b() const { return b_; }
    int deriv_limit() const { return static_cast<int>(d_.size()) - 1; }
    const std::vector<double>& coeffs(int k = 0) const { return d_.at(k); }
    /// max |c_j| over the last 10% of coefficients relative to max |c_j|.
    double tail_ratio() const;

  private:
    double a_ = -1.0, b_ = 1.0;
    std::vector<std::vector<double>> d_;  // coefficients of f, f', f'', ...
};

}  // namespace lis
