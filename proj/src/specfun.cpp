#include "lis/specfun.hpp"

#include "lis/errors.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <string>

namespace lis {

namespace {

using ld = long double;

constexpr ld kAi0 = 0.355028053887817239260063186004183176L;
constexpr ld kAip0 = -0.258819403792806798405183560189203963L;
constexpr double kTableLo = -20.0;
constexpr double kTableHi = 12.0;
constexpr int kPerUnit = 8;
constexpr int kTableSize = static_cast<int>((kTableHi - kTableLo) * kPerUnit) + 1;

struct AiPair {
    ld ai, aip;
};

// Taylor series of the Airy ODE about c, evaluated at c + d.
AiPair taylor(ld c, AiPair at, ld d) {
    ld a[3] = {at.ai, at.aip, c * at.ai / 2.0L};  // a_k, a_{k+1}, a_{k+2}
    ld val = a[0] + a[1] * d + a[2] * d * d;
    ld der = a[1] + 2.0L * a[2] * d;
    ld pw = d * d;  // d^{k+2} for the current a[2]
    int quiet = 0;
    for (int k = 1; k < 400; ++k) {
        // a_{k+2} = (c a_k + a_{k-1}) / ((k+1)(k+2)); window holds a_{k-1}, a_k, a_{k+1}
        ld nxt = (c * a[1] + a[0]) / ((k + 1.0L) * (k + 2.0L));
        a[0] = a[1];
        a[1] = a[2];
        a[2] = nxt;
        ld dterm = (k + 2.0L) * nxt * pw;
        pw *= d;
        ld term = nxt * pw;
        val += term;
        der += dterm;
        ld scale = std::fabs(val) + std::fabs(der) + 1e-4000L;
        if (std::fabs(term) + std::fabs(dterm) <= 1e-21L * scale) {
            if (++quiet >= 3) break;
        } else {
            quiet = 0;
        }
    }
    return {val, der};
}

// Asymptotic expansions with u_k = Gamma(3k+1/2)/(54^k k! Gamma(k+1/2)).
AiPair asymptotic(ld x) {
    const ld pi = std::numbers::pi_v<ld>;
    ld z = std::fabs(x);
    ld xi = 2.0L / 3.0L * z * std::sqrt(z);
    ld u[31], v[31];
    u[0] = 1.0L;
    v[0] = 1.0L;
    for (int k = 1; k <= 30; ++k) {
        u[k] = u[k - 1] * (6.0L * k - 5.0L) * (6.0L * k - 3.0L) * (6.0L * k - 1.0L) /
               ((2.0L * k - 1.0L) * 216.0L * k);
        v[k] = -(6.0L * k + 1.0L) / (6.0L * k - 1.0L) * u[k];
    }
    if (x > 0) {
        ld su = 0, sv = 0, p = 1, prev = INFINITY;
        for (int k = 0; k <= 30; ++k) {
            ld tu = u[k] * p, tv = v[k] * p;
            if (std::fabs(tu) > prev) break;
            prev = std::fabs(tu);
            su += tu;
            sv += tv;
            if (std::fabs(tu) < 1e-22L) break;
            p *= -1.0L / xi;
        }
        ld e = std::exp(-xi);
        ld q = std::pow(z, 0.25L);
        return {e * su / (2.0L * std::sqrt(pi) * q), -q * e * sv / (2.0L * std::sqrt(pi))};
    }
    // oscillatory side, DLMF 9.7.9 / 9.7.10
    ld ue = 0, uo = 0, ve = 0, vo = 0;
    ld p = 1, prev = INFINITY;
    for (int k = 0; k <= 30; ++k) {
        ld tu = u[k] * p, tv = v[k] * p;
        if (std::fabs(tu) > prev) break;
        prev = std::fabs(tu);
        // sign pattern (-1)^{floor(k/2)}
        ld sgn = ((k / 2) % 2 == 0) ? 1.0L : -1.0L;
        if (k % 2 == 0) {
            ue += sgn * tu;
            ve += sgn * tv;
        } else {
            uo += sgn * tu;
            vo += sgn * tv;
        }
        if (std::fabs(tu) < 1e-22L) break;
        p /= xi;
    }
    ld ph = xi - pi / 4.0L;
    ld c = std::cos(ph), s = std::sin(ph);
    ld q = std::pow(z, 0.25L);
    ld sp = std::sqrt(pi);
    return {(c * ue + s * uo) / (sp * q), q * (s * ve - c * vo) / sp};
}

struct AiryTable {
    AiPair centre[kTableSize];
    AiryTable() {
        auto cx = [](int i) { return static_cast<ld>(kTableLo) + static_cast<ld>(i) / kPerUnit; };
        const int i_lo = (-6 - static_cast<int>(kTableLo)) * kPerUnit;  // c = -6
        const int i_hi = (2 - static_cast<int>(kTableLo)) * kPerUnit;   // c = 2
        for (int i = i_lo; i <= i_hi; ++i) centre[i] = taylor(0.0L, {kAi0, kAip0}, cx(i));
        centre[kTableSize - 1] = asymptotic(cx(kTableSize - 1));
        for (int i = kTableSize - 2; i > i_hi; --i)
            centre[i] = taylor(cx(i + 1), centre[i + 1], -1.0L / kPerUnit);
        centre[0] = asymptotic(cx(0));
        for (int i = 1; i < i_lo; ++i) centre[i] = taylor(cx(i - 1), centre[i - 1], 1.0L / kPerUnit);
    }
};

const AiryTable& airy_table() {
    static const AiryTable table;
    return table;
}

}  // namespace

std::array<double, 2> airy_pair(double x) {
    if (!(std::fabs(x) <= 200.0)) throw DomainError("airy: |x| must be <= 200, got " + std::to_string(x));
    if (x > kTableHi || x < kTableLo) {
        AiPair r = asymptotic(x);
        return {static_cast<double>(r.ai), static_cast<double>(r.aip)};
    }
    const auto& tb = airy_table();
    int i = static_cast<int>(std::lround((x - kTableLo) * kPerUnit));
    ld c = static_cast<ld>(kTableLo) + static_cast<ld>(i) / kPerUnit;
    AiPair r = taylor(c, tb.centre[i], static_cast<ld>(x) - c);
    return {static_cast<double>(r.ai), static_cast<double>(r.aip)};
}

std::array<double, 8> airy_all(double x) {
    auto p = airy_pair(x);
    std::array<double, 8> d{};
    d[0] = p[0];
    d[1] = p[1];
    // Ai^{(k+2)} = x Ai^{(k)} + k Ai^{(k-1)}
    d[2] = x * d[0];
    for (int k = 1; k + 2 < 8; ++k) d[k + 2] = x * d[k] + k * d[k - 1];
    return d;
}

double airy(double x, int k) {
    if (k < 0 || k > 7) throw DomainError("airy: derivative order must be in 0..7");
    return airy_all(x)[k];
}

BesselTriple bessel_j_triple(int nu, double x) {
    if (nu < 0 || nu > 5000) throw DomainError("bessel_j: order out of range: " + std::to_string(nu));
    if (!(x >= 0.0) || x > 10.0 * (nu + 50)) throw DomainError("bessel_j: argument out of range");
    if (x == 0.0) {
        return {nu == 1 ? 1.0 : 0.0, nu == 0 ? 1.0 : 0.0, 0.0};
    }
    if (x < 1e-8) {
        // leading power-series terms
        auto series = [x](int k) {
            int a = std::abs(k);
            double h = 0.5 * x;
            double v = std::exp(a * std::log(h) - std::lgamma(a + 1.0)) * (1.0 - h * h / (a + 1.0));
            return (k < 0 && (a % 2)) ? -v : v;
        };
        return {series(nu - 1), series(nu), series(nu + 1)};
    }
    const int n_start = nu + 40 + static_cast<int>(std::ceil(1.2 * x));
    double jp = 0.0, jc = 1e-300;
    double sum = (n_start % 2 == 0) ? 2.0 * jc : 0.0;
    double rec[3] = {0.0, 0.0, 0.0};  // J_{nu-1}, J_nu, J_{nu+1}
    for (int k = n_start; k >= 1; --k) {
        double jm = (2.0 * k / x) * jc - jp;
        jp = jc;
        jc = jm;  // J_{k-1}
        int idx = k - 1 - (nu - 1);
        if (idx >= 0 && idx < 3) rec[idx] = jc;
        if (k - 1 == 0) sum += jc;
        else if ((k - 1) % 2 == 0) sum += 2.0 * jc;
        if (std::fabs(jc) > 1e250) {
            jc *= 1e-250;
            jp *= 1e-250;
            sum *= 1e-250;
            for (double& r : rec) r *= 1e-250;
        }
    }
    BesselTriple t{rec[0] / sum, rec[1] / sum, rec[2] / sum};
    if (nu == 0) t.jm1 = -t.jp1;
    return t;
}

double bessel_j(int nu, double x) { return bessel_j_triple(nu, x).j; }

OlverTables olver_tables(int kmax) {
    if (kmax < 1 || kmax > 10) throw DomainError("olver_tables: kmax must be in 1..10");
    const QPoly t = QPoly::variable();
    OlverTables tb;
    tb.A.push_back(QPoly(Rat(1)));
    tb.B.push_back(QPoly());
    // Residual operators of the transformed Bessel equation
    // (1+t e)^2 w'' + e (1+t e) w' + (2t + t^2 e) w = 0, w = f P + 2^{1/3} g Q.
    auto X = [&](int j) {
        if (j < 0) return QPoly();
        const QPoly& a = tb.A[j];
        const QPoly& b = tb.B[j];
        return a.derivative().derivative() + Rat(2) * b + Rat(4) * t * b.derivative() - Rat(2) * t * a;
    };
    auto Y = [&](int j) {
        if (j < 0) return QPoly();
        const QPoly& a = tb.A[j];
        const QPoly& b = tb.B[j];
        return b.derivative().derivative() - Rat(2) * a.derivative() - Rat(2) * t * b;
    };
    auto A = [&](int j) { return j < 0 ? QPoly() : tb.A[j]; };
    auto B = [&](int j) { return j < 0 ? QPoly() : tb.B[j]; };
    const QPoly t2 = t * t;
    for (int k = 1; k <= kmax; ++k) {
        QPoly sf = -(Rat(2) * t * X(k - 1) + t2 * X(k - 2) + A(k - 1).derivative() + Rat(2) * t * B(k - 1) +
                     t * (A(k - 2).derivative() + Rat(2) * t * B(k - 2)) + t2 * A(k - 1));
        QPoly sg = -(Rat(2) * t * Y(k - 1) + t2 * Y(k - 2) + (B(k - 1).derivative() - A(k - 1)) +
                     t * (B(k - 2).derivative() - A(k - 2)) + t2 * B(k - 1));
        // a'' + 2b + 4t b' = sf ;  b'' - 2a' = sg  (solve top-down, a_0 free)
        int top = std::max(sf.degree(), sg.degree() + 1) + 3;
        std::vector<Rat> a(top + 3, Rat(0)), b(top + 3, Rat(0));
        for (int m = top; m >= 0; --m) {
            b[m] = (sf.coeff(m) - Rat((m + 2) * (m + 1)) * a[m + 2]) / Rat(4 * m + 2);
            a[m + 1] = (Rat((m + 2) * (m + 1)) * b[m + 2] - sg.coeff(m)) / Rat(2 * (m + 1));
        }
        QPoly bk(b);
        // Wronskian normalisation: P^2 - P Q' + Q P' + 2 t Q^2 = 1/(1 + t e)
        Rat lower(0);
        for (int i = 1; i < k; ++i) {
            int j = k - i;
            lower += (A(i) * A(j) - A(i) * B(j).derivative() + B(i) * A(j).derivative() + Rat(2) * t * B(i) * B(j))
                         .coeff(0);
        }
        Rat rhs0 = (k == 0) ? Rat(1) : Rat(0);
        a[0] = (rhs0 + bk.derivative().coeff(0) - lower) / Rat(2);
        tb.A.push_back(QPoly(a));
        tb.B.push_back(bk);
    }
    return tb;
}

namespace {
const OlverTables& cached_olver() {
    static const OlverTables tb = olver_tables(10);
    return tb;
}
}  // namespace

double bessel_transition(int nu, double tau, int m) {
    if (nu < 1) throw DomainError("bessel_transition: nu must be positive");
    if (m < 0 || m > 10) throw DomainError("bessel_transition: m must be in 0..10");
    double nu23 = std::pow(static_cast<double>(nu), 2.0 / 3.0);
    if (!(tau > -nu23)) throw DomainError("bessel_transition: tau must exceed -nu^{2/3}");
    const auto& tb = cached_olver();
    const double alpha = std::cbrt(2.0);
    auto ai = airy_pair(-alpha * tau);
    double sa = 0.0, sb = 0.0, w = 1.0;
    for (int k = 0; k <= m; ++k) {
        sa += tb.A[k].eval(tau) * w;
        sb += tb.B[k].eval(tau) * w;
        w /= nu23;
    }
    double pre = alpha / std::cbrt(static_cast<double>(nu));
    return pre * (ai[0] * sa + alpha * ai[1] * sb);
}

const std::vector<Rat>& zeta_series_coeffs() {
    static const std::vector<Rat> c = [] {
        const int order = 40;
        std::vector<Rat> c(order + 1, Rat(0));
        c[1] = 1;
        // C(h) C'(h)^2 = (h - h^2/2)/(1-h)^2, whose h^n coefficient is (n+1)/2
        for (int n = 2; n <= order; ++n) {
            std::vector<Rat> d(n, Rat(0));  // d_i = (i+1) c_{i+1}, i < n (c_n still zero)
            for (int i = 0; i < n; ++i) d[i] = c[i + 1] * (i + 1);
            Rat acc(0);
            for (int k = 1; k <= n; ++k) {
                int j = n - k;  // e_j = sum d_i d_{j-i}
                Rat e(0);
                for (int i = 0; i <= j; ++i) e += d[i] * d[j - i];
                acc += c[k] * e;
            }
            c[n] = (Rat(n + 1) / 2 - acc) / Rat(2 * n + 1);
        }
        return c;
    }();
    return c;
}

double zeta_of_z(double z) {
    if (!(z > 0.0)) throw DomainError("zeta_of_z: z must be positive");
    double h = 1.0 - z;
    if (std::fabs(h) < 0.25) {
        static const std::vector<double> cd = [] {
            std::vector<double> v;
            for (const auto& r : zeta_series_coeffs()) v.push_back(r.get_d());
            return v;
        }();
        double s = 0.0;
        for (std::size_t k = cd.size(); k-- > 0;) s = s * h + cd[k];
        return std::cbrt(2.0) * s;
    }
    if (z < 1.0) {
        double w = std::sqrt(1.0 - z * z);
        double g = std::log((1.0 + w) / z) - w;
        return std::pow(1.5 * g, 2.0 / 3.0);
    }
    double w = std::sqrt(z * z - 1.0);
    double g = w - std::acos(1.0 / z);
    return -std::pow(1.5 * g, 2.0 / 3.0);
}

}  // namespace lis
