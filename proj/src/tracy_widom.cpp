#include "lis/tracy_widom.hpp"

#include "lis/errors.hpp"
#include "lis/kernels.hpp"
#include "lis/specfun.hpp"

#include <string>

namespace lis {

namespace {

constexpr double fit_lo = -12.0;
constexpr double fit_hi = 8.0;

}  // namespace

double TWModel::F(double t, int k) const {
    if (k < 0 || k > 7) throw DomainError("F: derivative order must be in 0..7");
    if (t > hi) return k == 0 ? 1.0 : 0.0;
    if (t < lo) return 0.0;
    return F_(t, k);
}

TWModel build_tw_model(int npts, const NystromOptions& opt) {
    if (npts < 120) throw DomainError("build_tw_model: npts must be at least 120");
    const auto K = airy_kernel().spec;
    auto xs = ChebModel::points(npts, fit_lo, fit_hi);
    std::vector<double> v(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) v[i] = Nystrom(K, {xs[i]}, opt).det();
    return TWModel(ChebModel::from_samples(v, fit_lo, fit_hi, 7));
}

const TWModel& tw_model() {
    static const TWModel model = build_tw_model();
    return model;
}

double F(double t, int k) { return tw_model().F(t, k); }

AiryResolvent::AiryResolvent(double t, const NystromOptions& opt) : sys_(airy_kernel().spec, {t}, opt) {
    const auto& xs = sys_.rule().nodes;
    for (auto& a : ai_) a.resize(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        auto d = airy_all(xs[i]);
        for (int k = 0; k < 8; ++k) ai_[k][i] = d[k];
    }
}

double AiryResolvent::u(int j, int k) const {
    if (j < 0 || j > 7 || k < 0 || k > 7) throw DomainError("u: indices must be in 0..7");
    return sys_.trace_nodes(ai_[j], ai_[k]);
}

double u(double t, int j, int k) {
    if (!(t >= TWModel::lo && t <= TWModel::hi)) throw DomainError("u: t must lie in [-10, 6]");
    if (j < 0 || j > 5 || k < 0 || k > 5) throw DomainError("u: indices must be in 0..5");
    return AiryResolvent(t).u(j, k);
}

std::pair<double, double> choup_trace_identity(double t) {
    if (!(t >= -8.0 && t <= 4.0)) throw DomainError("choup_trace_identity: t must lie in [-8, 4]");
    Nystrom sys(airy_kernel().spec, {t});
    double tr = 0.0;
    for (const auto& term : choup_L_terms()) tr += term.coef * sys.trace(term.u, term.v);
    return {sys.det() * tr, t * t * F(t, 1)};
}

}  // namespace lis
