#include "lis/fredholm.hpp"

#include "lis/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace lis {

QuadRule gauss_legendre(int m, double a, double b) {
    if (m < 1) throw DomainError("gauss_legendre: m must be positive");
    if (!(a < b)) throw DomainError("gauss_legendre: need a < b");
    std::vector<double> x(m), w(m);
    auto legendre = [m](double z) {
        double p0 = 1.0, p1 = z;
        for (int k = 2; k <= m; ++k) {
            double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        return std::pair{p1, m * (z * p1 - p0) / (z * z - 1.0)};
    };
    const int half = (m + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
        bool converged = false;
        for (int it = 0; it < 100 && !converged; ++it) {
            auto [p, dp] = legendre(z);
            double dz = p / dp;
            z -= dz;
            converged = std::fabs(dz) < 1e-16;
        }
        if (!converged) throw std::logic_error("gauss_legendre: Newton iteration failed");
        double dp = legendre(z).second;
        double wi = 2.0 / ((1.0 - z * z) * dp * dp);
        x[i] = -z;
        x[m - 1 - i] = z;
        w[i] = w[m - 1 - i] = wi;
    }
    if (m % 2 == 1) x[m / 2] = 0.0;
    QuadRule r;
    r.a = a;
    r.b = b;
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    r.nodes.resize(m);
    r.weights.resize(m);
    for (int i = 0; i < m; ++i) {
        r.nodes[i] = c + h * x[i];
        r.weights[i] = h * w[i];
    }
    return r;
}

Interval effective_interval(const KernelSpec& K, Interval iv, double truncation) {
    if (std::isinf(iv.b)) {
        if (!(K.decay_scale > 0.0))
            throw DomainError("fredholm: semi-infinite interval needs a decaying kernel");
        iv.b = std::max(iv.a, 0.0) + truncation;
    }
    if (!(iv.a < iv.b)) throw DomainError("fredholm: empty interval");
    return iv;
}

Nystrom::Nystrom(const KernelSpec& K, Interval iv, const NystromOptions& opt) : K_(K) {
    iv = effective_interval(K, iv, opt.truncation);
    rule_ = gauss_legendre(opt.m, iv.a, iv.b);
    const int m = opt.m;
    sw_.resize(m);
    for (int i = 0; i < m; ++i) sw_[i] = std::sqrt(rule_.weights[i]);
    A_.resize(m, m);
    const auto& xs = rule_.nodes;
    std::vector<std::array<double, 3>> fg;
    if (K.integrable) {
        fg.reserve(m);
        for (double x : xs) fg.push_back(K.integrable->node(x));
    }
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (K.symmetric && j < i) {
                A_(i, j) = A_(j, i);
                continue;
            }
            double k;
            if (i == j) {
                k = K.diag(xs[i]);
            } else if (K.integrable && std::fabs(xs[i] - xs[j]) >= 1e-6 * (1 + std::fabs(xs[i]) + std::fabs(xs[j]))) {
                const auto& p = fg[i];
                const auto& q = fg[j];
                k = K.integrable->c * (p[0] * q[1] - p[1] * q[0]) / (p[2] - q[2]);
            } else {
                k = K.eval(xs[i], xs[j]);
            }
            if (!std::isfinite(k)) throw NonFinite("fredholm: kernel value is not finite");
            A_(i, j) = (i == j ? 1.0 : 0.0) - sw_[i] * sw_[j] * k;
        }
    }
    lu_.compute(A_);
    det_ = lu_.determinant();
    rcond_ = lu_.rcond();
}

void Nystrom::require_regular() const {
    if (!(rcond_ > 1e-14)) throw SingularSystem("fredholm: Nystrom matrix is numerically singular");
}

std::vector<double> Nystrom::solve(const RealFn& g) const {
    require_regular();
    const int m = static_cast<int>(sw_.size());
    Eigen::VectorXd rhs(m);
    for (int i = 0; i < m; ++i) rhs[i] = sw_[i] * g(rule_.nodes[i]);
    Eigen::VectorXd z = lu_.solve(rhs);
    std::vector<double> out(m);
    for (int i = 0; i < m; ++i) out[i] = z[i] / sw_[i];
    return out;
}

double Nystrom::trace_nodes(const std::vector<double>& u, const std::vector<double>& v) const {
    require_regular();
    const int m = static_cast<int>(sw_.size());
    Eigen::VectorXd rhs(m);
    for (int i = 0; i < m; ++i) rhs[i] = sw_[i] * u[i];
    Eigen::VectorXd z = lu_.solve(rhs);
    double s = 0.0;
    for (int i = 0; i < m; ++i) s += sw_[i] * v[i] * z[i];
    return s;
}

double Nystrom::trace(const RealFn& u, const RealFn& v) const {
    const int m = static_cast<int>(sw_.size());
    std::vector<double> un(m), vn(m);
    for (int i = 0; i < m; ++i) {
        un[i] = u(rule_.nodes[i]);
        vn[i] = v(rule_.nodes[i]);
    }
    return trace_nodes(un, vn);
}

double Nystrom::resolvent_kernel(double x, double y) const {
    // R(x,y) = K(x,y) + int K(x,z) R(z,y) dz, with R(.,y) = (I-K)^{-1} K(.,y)
    auto col = solve([&](double z) { return K_(z, y); });
    double s = K_(x, y);
    for (std::size_t j = 0; j < col.size(); ++j) s += rule_.weights[j] * K_(x, rule_.nodes[j]) * col[j];
    return s;
}

double fredholm_det(const KernelSpec& K, Interval iv, int m, double truncation) {
    return Nystrom(K, iv, {m, truncation}).det();
}

std::vector<double> resolvent_solve(const KernelSpec& K, Interval iv, int m, const RealFn& g) {
    return Nystrom(K, iv, {m, 14.0}).solve(g);
}

double trace_u(const KernelSpec& K, Interval iv, const RealFn& u, const RealFn& v, int m) {
    return Nystrom(K, iv, {m, 14.0}).trace(u, v);
}

PlemeljTerms plemelj_corrections(const Nystrom& base, const FiniteRank& K1, const FiniteRank& K2,
                                 const FiniteRank& K3) {
    struct Term {
        int group;
        double c;
        std::vector<double> u, v;
    };
    std::vector<Term> terms;
    const auto& nodes = base.rule().nodes;
    auto add = [&](const FiniteRank& fr, int g) {
        for (const auto& t : fr) {
            Term tm{g, t.coef, {}, {}};
            for (double x : nodes) {
                tm.u.push_back(t.u(x));
                tm.v.push_back(t.v(x));
            }
            terms.push_back(std::move(tm));
        }
    };
    add(K1, 1);
    add(K2, 2);
    add(K3, 3);
    const std::size_t n = terms.size();
    // G(p,q) = <v_p, (I-K0)^{-1} u_q>
    Eigen::MatrixXd G(n, n);
    for (std::size_t q = 0; q < n; ++q)
        for (std::size_t p = 0; p < n; ++p) G(p, q) = base.trace_nodes(terms[q].u, terms[p].v);
    auto tr1 = [&](int g) {
        double s = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            if (terms[p].group == g) s += terms[p].c * G(p, p);
        return s;
    };
    auto tr2 = [&](int ga, int gb) {
        double s = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q)
                if (terms[p].group == ga && terms[q].group == gb)
                    s += terms[p].c * terms[q].c * G(p, q) * G(q, p);
        return s;
    };
    double t111 = 0.0;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t r = 0; r < n; ++r)
                if (terms[p].group == 1 && terms[q].group == 1 && terms[r].group == 1)
                    t111 += terms[p].c * terms[q].c * terms[r].c * G(p, q) * G(q, r) * G(r, p);
    const double a1 = tr1(1), a2 = tr1(2), a3 = tr1(3);
    const double b11 = tr2(1, 1), b12 = tr2(1, 2);
    PlemeljTerms d;
    d.d1 = -a1;
    d.d2 = 0.5 * a1 * a1 - 0.5 * b11 - a2;
    d.d3 = -a1 * a1 * a1 / 6.0 + 0.5 * a1 * b11 - b12 - t111 / 3.0 + a1 * a2 - a3;
    return d;
}

PlemeljTerms plemelj_corrections(const KernelSpec& K0, Interval iv, const FiniteRank& K1,
                                 const FiniteRank& K2, const FiniteRank& K3, int m) {
    Nystrom base(K0, iv, {m, 14.0});
    return plemelj_corrections(base, K1, K2, K3);
}

}  // namespace lis
