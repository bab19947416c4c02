#pragma once

// GUE Tracy-Widom distribution F(t) = det(I - K0) on L^2(t, inf) and the
// resolvent traces u_jk(t) = tr((I - K0)^{-1} Ai^(j) (x) Ai^(k)).

#include "lis/chebyshev.hpp"
#include "lis/fredholm.hpp"

#include <array>
#include <utility>
#include <vector>

namespace lis {

/// Chebyshev model of F on [lo, hi] with derivatives through order 7.
class TWModel {
  public:
    static constexpr double lo = -10.0;
    static constexpr double hi = 6.0;

    TWModel() = default;
    explicit TWModel(ChebModel m) : F_(std::move(m)) {}

    /// F^{(k)}(t); saturates to the limits 0 (t < lo) and 1, 0, 0, ... (t > hi).
    double F(double t, int k = 0) const;
    const ChebModel& model() const { return F_; }

  private:
    ChebModel F_;
};

/// Samples det(I - K0) at npts Chebyshev points. The interpolant is built on the
/// wider interval [-12, 8] so that high derivatives stay clean near the edges of [lo, hi].
TWModel build_tw_model(int npts = 240, const NystromOptions& opt = {});

/// Process-wide default model, built on first use.
const TWModel& tw_model();

/// F^{(k)}(t) from the default model.
double F(double t, int k = 0);

/// Airy resolvent on (t, inf) with Ai^{(j)} tabulated at the nodes, j <= 7.
class AiryResolvent {
  public:
    explicit AiryResolvent(double t, const NystromOptions& opt = {});
    double det() const { return sys_.det(); }
    /// u_jk(t) for 0 <= j, k <= 7.
    double u(int j, int k) const;
    const Nystrom& system() const { return sys_; }

  private:
    Nystrom sys_;
    std::array<std::vector<double>, 8> ai_;
};

/// u_jk(t) for t in [-10, 6], 0 <= j, k <= 5.
double u(double t, int j, int k);

/// (F(t) tr((I - K0)^{-1} L), t^2 F'(t)) with L the Choup kernel.
std::pair<double, double> choup_trace_identity(double t);

}  // namespace lis
