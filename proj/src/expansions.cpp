#include "lis/expansions.hpp"

#include "lis/errors.hpp"
#include "lis/fredholm.hpp"
#include "lis/kernels.hpp"
#include "lis/specfun.hpp"
#include "lis/tracy_widom.hpp"

#include <array>
#include <cmath>
#include <map>
#include <sstream>

namespace lis {

double t_nu(double nu, double r) {
    if (!(r > 0.0)) throw DomainError("t_nu: r must be positive");
    return (nu - 2.0 * std::sqrt(r)) / std::pow(r, 1.0 / 6.0);
}

double t_nu_prime(double nu, double r) { return -std::pow(r, -2.0 / 3.0) - t_nu(nu, r) / (6.0 * r); }

double psi_h_inverse(double h, double t) {
    if (!(h > 0.0) || !(h * t < 1.0)) throw DomainError("psi_h_inverse: need h > 0 and t < 1/h");
    return zeta_of_z(1.0 - h * t) / (std::cbrt(2.0) * h);
}

double t_bracket(double r, double t) {
    if (!(r > 0.0)) throw DomainError("t_bracket: r must be positive");
    const double c = 2.0 * std::sqrt(r), w = std::pow(r, 1.0 / 6.0);
    return (std::floor(c + t * w) - c) / w;
}

double e2_hard(double s, int nu, int m) {
    if (!(s >= 0.0)) throw DomainError("e2_hard: s must be nonnegative");
    if (s == 0.0) return 1.0;
    const auto K = bessel_kernel(nu);
    // truncate where the transformed variable exceeds max(t, 0) + 14, t = phi_nu^{-1}(s)
    const double h = K.h;
    const double t = (1.0 - std::sqrt(s) / nu) / h;
    const double top = std::max(t, 0.0) + 14.0;
    double lower = top < 1.0 / h ? phi_nu(nu, top) : 0.0;
    if (!(lower < s)) return 1.0;
    return Nystrom(K.spec, {lower, s}, {m, 14.0}).det();
}

// ---- linear forms --------------------------------------------------------------

namespace {

void trim(std::vector<QPoly>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

}  // namespace

LinearForm LinearForm::derivative() const {
    LinearForm d;
    d.p.resize(p.size() + 1);
    for (std::size_t k = 0; k < p.size(); ++k) {
        d.p[k] += p[k].derivative();
        d.p[k + 1] += p[k];
    }
    trim(d.p);
    return d;
}

double LinearForm::eval(double t) const {
    double s = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k)
        if (!p[k].is_zero()) s += p[k].eval(t) * F(t, static_cast<int>(k));
    return s;
}

std::string LinearForm::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << p[k].str() << ")*F^(" << k << ")";
    }
    return first ? "0" : os.str();
}

LinearForm operator+(const LinearForm& a, const LinearForm& b) {
    LinearForm c;
    c.p.resize(std::max(a.p.size(), b.p.size()));
    for (std::size_t k = 0; k < a.p.size(); ++k) c.p[k] += a.p[k];
    for (std::size_t k = 0; k < b.p.size(); ++k) c.p[k] += b.p[k];
    trim(c.p);
    return c;
}

LinearForm operator*(const Rat& c, const LinearForm& a) { return QPoly(c) * a; }

LinearForm operator*(const QPoly& c, const LinearForm& a) {
    LinearForm r;
    for (const auto& q : a.p) r.p.push_back(c * q);
    trim(r.p);
    return r;
}

bool operator==(const LinearForm& a, const LinearForm& b) {
    auto x = a, y = b;
    trim(x.p);
    trim(y.p);
    return x.p == y.p;
}

namespace {

struct Term {
    int k;            // derivative order
    const char* c;    // rational coefficient
    int power;        // power of t
};

LinearForm make(std::initializer_list<Term> terms) {
    LinearForm f;
    for (const auto& tm : terms) {
        if (static_cast<int>(f.p.size()) <= tm.k) f.p.resize(tm.k + 1);
        Rat c(tm.c);
        c.canonicalize();
        f.p[tm.k] += QPoly::monomial(c, tm.power);
    }
    trim(f.p);
    return f;
}

using Table = std::map<Family, std::array<LinearForm, 4>>;

Table build_table() {
    Table T;
    const LinearForm F0 = make({{0, "1", 0}});
    T[Family::F] = {F0, make({{1, "3/10", 2}, {2, "-1/5", 0}}),
                    make({{1, "2/175", 0}, {1, "32/175", 3}, {2, "-16/175", 1}, {2, "9/200", 4},
                          {3, "-3/50", 2}, {4, "1/50", 0}}),
                    make({{1, "64/7875", 1}, {1, "1037/7875", 4}, {2, "-9/175", 2}, {2, "48/875", 5},
                          {3, "-122/7875", 0}, {3, "-8/125", 3}, {3, "9/2000", 6}, {4, "16/875", 1},
                          {4, "-9/1000", 4}, {5, "3/500", 2}, {6, "-1/750", 0}})};
    T[Family::F_tilde] = {F0, make({{2, "-1/5", 0}}),
                          make({{1, "2/175", 0}, {2, "-16/175", 1}, {4, "1/50", 0}}),
                          make({{1, "64/7875", 1}, {2, "-24/875", 2}, {3, "-122/7875", 0}, {4, "16/875", 1},
                                {6, "-1/750", 0}})};
    T[Family::FP] = {F0, make({{1, "-1/60", 2}, {2, "-1/10", 0}}),
                     make({{1, "1/350", 0}, {1, "2/1575", 3}, {2, "11/1050", 1}, {2, "1/7200", 4},
                           {3, "1/600", 2}, {4, "1/200", 0}}),
                     make({{1, "-1/1125", 1}, {1, "-41/283500", 4}, {2, "-11/6300", 2}, {2, "-1/47250", 5},
                           {3, "-61/31500", 0}, {3, "-19/63000", 3}, {3, "-1/1296000", 6}, {4, "-11/10500", 1},
                           {4, "-1/72000", 4}, {5, "-1/12000", 2}, {6, "-1/6000", 0}})};
    T[Family::FD] = {F0, make({{1, "-1/60", 2}, {2, "-3/5", 0}}),
                     make({{1, "-139/350", 0}, {1, "2/1575", 3}, {2, "-43/350", 1}, {2, "1/7200", 4},
                           {3, "1/100", 2}, {4, "9/50", 0}}),
                     make({{1, "-562/7875", 1}, {1, "-41/283500", 4}, {2, "1/300", 2}, {2, "-1/47250", 5},
                           {3, "5137/15750", 0}, {3, "9/7000", 3}, {3, "-1/1296000", 6}, {4, "129/1750", 1},
                           {4, "-1/12000", 4}, {5, "-3/1000", 2}, {6, "-9/250", 0}})};
    T[Family::Fstar] = {make({{1, "1", 0}}), make({{1, "-1/30", 1}, {2, "-1/60", 2}, {3, "-67/120", 0}}),
                        make({{1, "2/525", 2}, {2, "-629/1200", 0}, {2, "23/12600", 3}, {3, "-899/8400", 1},
                              {3, "1/7200", 4}, {4, "67/7200", 2}, {5, "1493/9600", 0}}),
                        make({{1, "-373/5250", 0}, {1, "-41/70875", 3}, {2, "-1781/28000", 1},
                              {2, "-71/283500", 4}, {3, "63/8000", 2}, {3, "-13/504000", 5},
                              {4, "41473/112000", 0}, {4, "13/12096", 3}, {4, "-1/1296000", 6},
                              {5, "131057/2016000", 1}, {5, "-67/864000", 4}, {6, "-1493/576000", 2},
                              {7, "-232319/8064000", 0}})};
    return T;
}

const Table& table() {
    static const Table T = build_table();
    return T;
}

}  // namespace

Family parse_family(const std::string& name) {
    static const std::map<std::string, Family> names{
        {"F", Family::F},         {"F_tilde", Family::F_tilde}, {"FP", Family::FP},
        {"FD", Family::FD},       {"Fstar", Family::Fstar},     {"FS", Family::FS},
        {"FS_tilde", Family::FS_tilde}};
    auto it = names.find(name);
    if (it == names.end()) throw DomainError("unknown coefficient family: " + name);
    return it->second;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::F: return "F";
        case Family::F_tilde: return "F_tilde";
        case Family::FP: return "FP";
        case Family::FD: return "FD";
        case Family::Fstar: return "Fstar";
        case Family::FS: return "FS";
        case Family::FS_tilde: return "FS_tilde";
    }
    return "?";
}

const LinearForm& linear_form(Family f, int j) {
    if (f == Family::FS || f == Family::FS_tilde)
        throw DomainError("linear_form: the Stirling families are not linear forms");
    if (j < 0 || j > 3) throw DomainError("linear_form: order must be in 0..3");
    return table().at(f)[j];
}

double coeff(Family f, int j, double t) {
    if (f == Family::FS || f == Family::FS_tilde) {
        if (j != 2) throw DomainError("coeff: the Stirling families are available for j = 2 only");
        const double f0 = F(t), f1 = F(t, 1), f2 = F(t, 2), f3 = F(t, 3), f4 = F(t, 4);
        const double r1 = f1 / f0;
        if (f == Family::FS)
            return f0 * (-0.75 * std::pow(r1, 4) + 1.5 * r1 * r1 * f2 / f0 - 0.375 * (f2 / f0) * (f2 / f0) -
                         0.5 * r1 * f3 / f0) +
                   0.125 * f4;
        return -0.5 * f1 + 0.25 * f0 * std::pow(r1, 4) - 0.375 * f2 * f2 / f0 + 0.125 * f4;
    }
    return linear_form(f, j).eval(t);
}

RelationReport relation_checks(double t, double tol) {
    if (!(t >= -8.0 && t <= 4.0)) throw DomainError("relation_checks: t must lie in [-8, 4]");
    const auto& F1 = linear_form(Family::F, 1);
    const auto& Ft1 = linear_form(Family::F_tilde, 1);
    const auto& P1 = linear_form(Family::FP, 1);
    const auto& P2 = linear_form(Family::FP, 2);
    const auto& D1 = linear_form(Family::FD, 1);
    const auto& D2 = linear_form(Family::FD, 2);
    const QPoly tt = QPoly::variable();
    auto d = [](int k, const QPoly& c) {
        LinearForm f;
        f.p.resize(k + 1);
        f.p[k] = c;
        return f;
    };
    const Rat half(1, 2);
    RelationReport rep;
    auto add = [&](const std::string& name, double lhs, double rhs) {
        double e = std::fabs(lhs - rhs);
        rep.names.push_back(name);
        rep.mismatch.push_back(e);
        rep.max_mismatch = std::max(rep.max_mismatch, e);
        if (!(e <= tol)) throw ToleranceExceeded("relation check failed: " + name);
    };
    add("FD1 = FP1 - F''/2", D1.eval(t), (P1 + d(2, QPoly(-half))).eval(t));
    add("FD2 = FP2 - (FP1)''/2 - 5F'/12 - tF''/6 + F''''/8", D2.eval(t),
        (P2 + (-half) * P1.derivative().derivative() + d(1, QPoly(Rat(-5, 12))) + d(2, Rat(-1, 6) * tt) +
         d(4, QPoly(Rat(1, 8))))
            .eval(t));
    add("F1 = F_tilde1 + 3t^2F'/10", F1.eval(t), (Ft1 + d(1, Rat(3, 10) * tt * tt)).eval(t));
    add("FP1 = F1/2 - t^2F'/6", P1.eval(t), (half * F1 + d(1, Rat(-1, 6) * tt * tt)).eval(t));
    return rep;
}

// ---- residual validators -------------------------------------------------------

double hard_to_soft_residual(int nu, double t, int m) {
    if (m < 0 || m > 3) throw DomainError("hard_to_soft_residual: m must be in 0..3");
    if (!(t >= -6.0 && t <= 2.0)) throw DomainError("hard_to_soft_residual: t must lie in [-6, 2]");
    if (nu < 2) throw DomainError("hard_to_soft_residual: nu must be at least 2");
    const double h = h_nu(nu);
    double r = e2_hard(phi_nu(nu, t), nu);
    for (int j = 0; j < m; ++j) r -= coeff(Family::F, j, t) * std::pow(h, j);
    return r * std::pow(h, -m);
}

namespace {

double poisson_sum(double r, int l, double t, int m) {
    double v = e2_hard(4.0 * r, l);
    for (int j = 0; j < m; ++j) v -= coeff(Family::FP, j, t) * std::pow(r, -j / 3.0);
    return v * std::pow(r, m / 3.0);
}

}  // namespace

double poissonized_residual(double r, int l, int m) {
    if (m < 0 || m > 3) throw DomainError("poissonized_residual: m must be in 0..3");
    const double t = t_nu(l, r);
    if (!(t >= -6.0 && t <= 2.0)) throw DomainError("poissonized_residual: t_l(r) must lie in [-6, 2]");
    return poisson_sum(r, l, t, m);
}

double poissonized_residual_bracket(double r, double t, int m) {
    if (m < 0 || m > 3) throw DomainError("poissonized_residual_bracket: m must be in 0..3");
    if (!(t >= -6.0 && t <= 2.0)) throw DomainError("poissonized_residual_bracket: t must lie in [-6, 2]");
    const int l = static_cast<int>(std::floor(2.0 * std::sqrt(r) + t * std::pow(r, 1.0 / 6.0)));
    if (l < 1) throw DomainError("poissonized_residual_bracket: bracket gives l < 1");
    return poisson_sum(r, l, t, m);
}

double cdf_expansion(int n, int l, int m) {
    if (m < 0 || m > 3) throw DomainError("cdf_expansion: m must be in 0..3");
    const double t = t_nu(l, n);
    if (!(t >= -8.0 && t <= 4.0)) throw DomainError("cdf_expansion: t_l(n) must lie in [-8, 4]");
    double v = 0.0;
    for (int j = 0; j <= m; ++j) v += coeff(Family::FD, j, t) * std::pow(n, -j / 3.0);
    return v;
}

double pdf_expansion(int n, int l, int m) {
    if (m < 0 || m > 3) throw DomainError("pdf_expansion: m must be in 0..3");
    const double t = t_nu(l - 0.5, n);
    if (!(t >= -8.0 && t <= 4.0)) throw DomainError("pdf_expansion: t_{l-1/2}(n) must lie in [-8, 4]");
    double v = 0.0;
    for (int j = 0; j <= m; ++j) v += coeff(Family::Fstar, j, t) * std::pow(n, -j / 3.0);
    return v * std::pow(n, -1.0 / 6.0);
}

}  // namespace lis
