#include "lis/fform.hpp"

#include "lis/errors.hpp"
#include "lis/kernels.hpp"
#include "lis/specfun.hpp"
#include "lis/tracy_widom.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <numeric>
#include <set>

namespace lis {

QQPoly::QQPoly(const QPoly& c) {
    if (!c.is_zero()) t_[{0, 0}] = c;
}

QQPoly QQPoly::monomial(const QPoly& c, int alpha, int beta) {
    QQPoly r;
    if (!c.is_zero()) r.t_[{alpha, beta}] = c;
    return r;
}

QPoly QQPoly::coeff(int alpha, int beta) const {
    auto it = t_.find({alpha, beta});
    return it == t_.end() ? QPoly() : it->second;
}

int QQPoly::deg_q() const {
    int d = -1;
    for (const auto& [k, c] : t_) d = std::max(d, k.first + k.second);
    return d;
}

void QQPoly::add(const Key& k, const QPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(k, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

double QQPoly::eval(double s, double q, double dq) const {
    double v = 0.0;
    for (const auto& [k, c] : t_) v += c.eval(s) * std::pow(q, k.first) * std::pow(dq, k.second);
    return v;
}

std::string QQPoly::str() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : t_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str("s") + ")";
        if (k.first > 0) out += "*q^" + std::to_string(k.first);
        if (k.second > 0) out += "*q'^" + std::to_string(k.second);
    }
    return out;
}

QQPoly QQPoly::operator-() const {
    QQPoly r(*this);
    for (auto& [k, c] : r.t_) c = -c;
    return r;
}

QQPoly& QQPoly::operator+=(const QQPoly& o) {
    for (const auto& [k, c] : o.t_) add(k, c);
    return *this;
}

QQPoly& QQPoly::operator-=(const QQPoly& o) {
    for (const auto& [k, c] : o.t_) add(k, -c);
    return *this;
}

QQPoly operator*(const QQPoly& a, const QQPoly& b) {
    QQPoly r;
    for (const auto& [ka, ca] : a.t_)
        for (const auto& [kb, cb] : b.t_) r.add({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return r;
}

QQPoly pii_diff(const QQPoly& T) {
    // d(c q^a q'^b) = c' q^a q'^b + a c q^{a-1} q'^{b+1} + b c q^a q'^{b-1} (s q + 2 q^3)
    QQPoly r;
    const QPoly s = QPoly::variable();
    for (const auto& [k, c] : T.terms()) {
        const auto [a, b] = k;
        r += QQPoly::monomial(c.derivative(), a, b);
        if (a > 0) r += QQPoly::monomial(c * Rat(a), a - 1, b + 1);
        if (b > 0) {
            r += QQPoly::monomial(c * s * Rat(b), a + 1, b - 1);
            r += QQPoly::monomial(c * Rat(2 * b), a + 3, b - 1);
        }
    }
    return r;
}

const QQPoly& F_over_F(int n) {
    static std::mutex mu;
    static std::vector<QQPoly> cache;
    if (n < 0 || n > 24) throw DomainError("F_over_F: n must be in 0..24");
    std::lock_guard lock(mu);
    if (cache.empty()) {
        cache.emplace_back(Rat(1));
        // q'^2 - s q^2 - q^4
        cache.push_back(QQPoly::monomial(QPoly(Rat(1)), 0, 2) - QQPoly::monomial(QPoly::variable(), 2, 0) -
                        QQPoly::monomial(QPoly(Rat(1)), 4, 0));
    }
    while (static_cast<int>(cache.size()) <= n) {
        const auto& last = cache.back();
        cache.push_back(pii_diff(last) + cache[1] * last);
    }
    return cache[n];
}

QQPoly FForm::expand() const {
    QQPoly r;
    for (int k = 1; k <= order(); ++k) r += QQPoly(p[k - 1]) * F_over_F(k);
    return r;
}

double FForm::eval(double t, const std::vector<double>& f_ratio) const {
    if (static_cast<int>(f_ratio.size()) <= order()) throw DomainError("FForm::eval: too few derivative ratios");
    double v = 0.0;
    for (int k = 1; k <= order(); ++k) v += p[k - 1].eval(t) * f_ratio[k];
    return v;
}

std::string FForm::str() const {
    std::string out;
    for (int k = 1; k <= order(); ++k) {
        if (p[k - 1].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + p[k - 1].str("s") + ")*D";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Solved: return "solved";
        case Verdict::Inconsistent: return "inconsistent";
        case Verdict::NonPolynomial: return "non-polynomial";
        case Verdict::DerivativeMismatch: return "derivative-mismatch";
    }
    return "unknown";
}

namespace {

using Row = std::vector<QPoly>;

void strip_content(Row& row) {
    QPoly g;
    for (const auto& e : row) {
        if (e.is_zero()) continue;
        g = gcd(g, e);
        if (g.degree() == 0) break;
    }
    if (g.degree() <= 0) return;
    for (auto& e : row)
        if (!e.is_zero()) e = divmod(e, g).first;
}

struct Solution {
    Verdict verdict = Verdict::Solved;
    std::vector<QPoly> x;
    std::string detail;
};

// Solve the columns of `cols` (last one is the right-hand side) over Q(s) and insist on
// a unique polynomial solution.
Solution solve_poly_system(const std::vector<QQPoly>& columns, const QQPoly& rhs, int& nrows) {
    std::set<QQPoly::Key, MonomialLess> keys;
    for (const auto& c : columns)
        for (const auto& [k, v] : c.terms()) keys.insert(k);
    for (const auto& [k, v] : rhs.terms()) keys.insert(k);
    const int N = static_cast<int>(columns.size());
    std::vector<Row> A;
    for (const auto& k : keys) {
        Row r(N + 1);
        for (int j = 0; j < N; ++j) r[j] = columns[j].coeff(k.first, k.second);
        r[N] = rhs.coeff(k.first, k.second);
        A.push_back(std::move(r));
    }
    nrows = static_cast<int>(A.size());
    const int M = nrows;

    std::vector<int> pivot_col;
    int pr = 0;
    for (int c = 0; c < N && pr < M; ++c) {
        int best = -1;
        for (int i = pr; i < M; ++i) {
            if (A[i][c].is_zero()) continue;
            if (best < 0 || A[i][c].degree() < A[best][c].degree()) best = i;
        }
        if (best < 0) continue;
        std::swap(A[pr], A[best]);
        const QPoly piv = A[pr][c];
        for (int i = pr + 1; i < M; ++i) {
            if (A[i][c].is_zero()) continue;
            const QPoly g = gcd(piv, A[i][c]);
            const QPoly f_piv = divmod(piv, g).first, f_row = divmod(A[i][c], g).first;
            for (int j = c; j <= N; ++j) {
                QPoly v = A[i][j] * f_piv;
                if (!A[pr][j].is_zero()) v -= A[pr][j] * f_row;
                A[i][j] = std::move(v);
            }
            strip_content(A[i]);
        }
        pivot_col.push_back(c);
        ++pr;
    }
    Solution sol;
    for (int i = pr; i < M; ++i) {
        if (!A[i][N].is_zero()) {
            sol.verdict = Verdict::Inconsistent;
            sol.detail = "linear system has no solution over Q(s)";
            return sol;
        }
    }
    if (pr < N) {
        sol.verdict = Verdict::Inconsistent;
        sol.detail = "linear system is rank deficient (" + std::to_string(N - pr) + " free unknowns)";
        return sol;
    }
    sol.x.assign(N, QPoly());
    for (int r = pr - 1; r >= 0; --r) {
        const int c = pivot_col[r];
        QPoly acc = A[r][N];
        for (int j = c + 1; j < N; ++j)
            if (!A[r][j].is_zero() && !sol.x[j].is_zero()) acc -= A[r][j] * sol.x[j];
        auto [q, rem] = divmod(acc, A[r][c]);
        if (!rem.is_zero()) {
            sol.verdict = Verdict::NonPolynomial;
            sol.detail = "unknown " + std::to_string(c) + " is not a polynomial in s";
            return sol;
        }
        sol.x[c] = std::move(q);
    }
    return sol;
}

}  // namespace

LFormResult lform_solve(const QQPoly& T_prime, int n) {
    if (n < 1 || n > 23) throw DomainError("lform_solve: order must be in 1..23");
    std::vector<QQPoly> cols;
    for (int k = 1; k <= n; ++k) cols.push_back(pii_diff(F_over_F(k)));
    for (int k = 1; k <= n; ++k) cols.push_back(F_over_F(k));
    LFormResult res;
    res.cols = 2 * n;
    auto sol = solve_poly_system(cols, T_prime, res.rows);
    res.verdict = sol.verdict;
    res.detail = sol.detail;
    if (!sol.x.empty() && sol.verdict == Verdict::Solved) {
        for (int k = 0; k < n; ++k) {
            if (sol.x[k].derivative() != sol.x[n + k]) {
                res.verdict = Verdict::DerivativeMismatch;
                res.detail = "r_" + std::to_string(k + 1) + " differs from p_" + std::to_string(k + 1) + "'";
                return res;
            }
        }
        res.form.p.assign(sol.x.begin(), sol.x.begin() + n);
        if (pii_diff(res.form.expand()) != T_prime)
            throw std::logic_error("lform_solve: back-substitution does not reproduce T'");
    }
    return res;
}

LFormResult lform_solve_direct(const QQPoly& T, int n) {
    if (n < 1 || n > 24) throw DomainError("lform_solve_direct: order must be in 1..24");
    std::vector<QQPoly> cols;
    for (int k = 1; k <= n; ++k) cols.push_back(F_over_F(k));
    LFormResult res;
    res.cols = n;
    auto sol = solve_poly_system(cols, T, res.rows);
    res.verdict = sol.verdict;
    res.detail = sol.detail;
    if (sol.verdict == Verdict::Solved) {
        res.form.p = std::move(sol.x);
        if (res.form.expand() != T) throw std::logic_error("lform_solve_direct: back-substitution failed");
    }
    return res;
}

namespace {

class STTable {
  public:
    static STTable& instance() {
        static STTable t;
        return t;
    }

    QQPoly q(int n) {
        std::lock_guard lock(mu_);
        return q_locked(n);
    }

    FForm u(int j, int k) {
        std::lock_guard lock(mu_);
        return u_locked(j, k);
    }

  private:
    QQPoly q_locked(int n) {
        if (n < 0) throw DomainError("st_q: n must be non-negative");
        if (auto it = q_.find(n); it != q_.end()) return it->second;
        QQPoly r;
        if (n == 0) {
            r = QQPoly::q();
        } else if (n == 1) {
            r = QQPoly::dq() + F_over_F(1) * QQPoly::q();
        } else {
            if (n >= 3) r += QQPoly(Rat(n - 2)) * q_locked(n - 3);
            r += QQPoly::s() * q_locked(n - 2);
            r -= u_locked(n - 2, 1).expand() * q_locked(0);
            r += u_locked(n - 2, 0).expand() * q_locked(1);
        }
        q_[n] = r;
        return r;
    }

    FForm u_locked(int j, int k) {
        if (j < 0 || k < 0) throw DomainError("st_u: indices must be non-negative");
        if (j < k) std::swap(j, k);
        if (auto it = u_.find({j, k}); it != u_.end()) return it->second;
        const QQPoly dT = -(q_locked(j) * q_locked(k));
        auto res = lform_solve(dT, j + k + 1);
        if (!res.ok())
            throw NoConvergence("st_u: u_" + std::to_string(j) + std::to_string(k) +
                                " has no linear F-form: " + verdict_name(res.verdict));
        u_[{j, k}] = res.form;
        return res.form;
    }

    std::recursive_mutex mu_;
    std::map<int, QQPoly> q_;
    std::map<std::pair<int, int>, FForm> u_;
};

}  // namespace

QQPoly st_q(int n) { return STTable::instance().q(n); }

QQPoly st_u_prime(int j, int k) { return -(st_q(j) * st_q(k)); }

FForm st_u(int j, int k) { return STTable::instance().u(j, k); }

QQPoly st_u_poly(int j, int k) { return st_u(j, k).expand(); }

std::map<std::pair<int, int>, FForm> st_table(int max_sum) {
    if (max_sum < 0 || max_sum > 10) throw DomainError("st_table: max_sum must be in 0..10");
    std::map<std::pair<int, int>, FForm> out;
    for (int s = 0; s <= max_sum; ++s)
        for (int j = s; j >= 0; --j) out[{j, s - j}] = st_u(j, s - j);
    return out;
}

namespace {

template <typename T, typename Entry>
T leibniz_det(int m, const Entry& entry, const T& one) {
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    T total{};
    do {
        int inversions = 0;
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b)
                if (perm[a] > perm[b]) ++inversions;
        T prod = one;
        for (int a = 0; a < m; ++a) prod = prod * entry(a, perm[a]);
        if (inversions % 2 == 0)
            total = total + prod;
        else
            total = total - prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

void check_minor(const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.empty() || rows.size() != cols.size() || rows.size() > 4)
        throw DomainError("minor: rows and cols must have equal size in 1..4");
    for (int v : rows)
        if (v < 0) throw DomainError("minor: negative index");
    for (int v : cols)
        if (v < 0) throw DomainError("minor: negative index");
}

}  // namespace

QQPoly minor_poly(const std::vector<int>& rows, const std::vector<int>& cols) {
    check_minor(rows, cols);
    return leibniz_det<QQPoly>(
        static_cast<int>(rows.size()), [&](int a, int b) { return st_u_poly(rows[a], cols[b]); }, QQPoly(Rat(1)));
}

LFormResult minor_fform(const std::vector<int>& rows, const std::vector<int>& cols) {
    const QQPoly T = minor_poly(rows, cols);
    int n = static_cast<int>(rows.size());
    for (int v : rows) n += v;
    for (int v : cols) n += v;
    auto res = lform_solve(pii_diff(T), n);
    if (res.ok() && res.form.expand() != T) throw std::logic_error("minor_fform: form does not reproduce the minor");
    return res;
}

std::pair<double, double> hastings_mcleod(double t) {
    // q_j(t) = ((I - K0)^{-1} Ai^{(j)})(t) by Nystrom interpolation; q' = q_1 - u_00 q
    AiryResolvent R(t);
    const auto& sys = R.system();
    const auto& rule = sys.rule();
    const auto K = airy_kernel().spec;
    auto apply = [&](int j) {
        auto f = sys.solve([j](double x) { return airy(x, j); });
        double v = airy(t, j);
        for (std::size_t i = 0; i < f.size(); ++i) v += rule.weights[i] * K(t, rule.nodes[i]) * f[i];
        return v;
    };
    const double q0 = apply(0), q1 = apply(1);
    return {q0, q1 - R.u(0, 0) * q0};
}

std::vector<double> f_ratios(double t, int n) {
    if (n < 0 || n > 24) throw DomainError("f_ratios: n must be in 0..24");
    std::vector<double> out(n + 1);
    if (n <= 7) {
        const double f0 = F(t);
        for (int k = 0; k <= n; ++k) out[k] = F(t, k) / f0;
        return out;
    }
    auto [q, dq] = hastings_mcleod(t);
    for (int k = 0; k <= n; ++k) out[k] = F_over_F(k).eval(t, q, dq);
    return out;
}

double numeric_crosscheck(const FForm& form, const std::function<double(double)>& target,
                          const std::vector<double>& ts) {
    double worst = 0.0;
    for (double t : ts) {
        if (!(t >= -8.0 && t <= 4.0)) throw DomainError("numeric_crosscheck: t must lie in [-8, 4]");
        worst = std::max(worst, std::fabs(form.eval(t, f_ratios(t, form.order())) - target(t)));
    }
    return worst;
}

namespace {

/// Ai^{(j)}(x) for j <= 10 from Ai^{(n+2)} = x Ai^{(n)} + n Ai^{(n-1)}.
double airy_high(double x, int j) {
    const auto lowd = airy_all(x);
    if (j < 8) return lowd[j];
    std::array<double, 11> d{};
    std::copy(lowd.begin(), lowd.end(), d.begin());
    for (int n = 6; n + 2 <= j; ++n) d[n + 2] = x * d[n] + n * d[n - 1];
    return d[j];
}

/// u_jk(t) for indices up to 10; the tabulated resolvent covers indices <= 7.
double trace_jk(const AiryResolvent& R, int j, int k) {
    if (j <= 7 && k <= 7) return R.u(j, k);
    return R.system().trace([j](double x) { return airy_high(x, j); }, [k](double x) { return airy_high(x, k); });
}

}  // namespace

double crosscheck_u(int j, int k, const std::vector<double>& ts) {
    if (j > 10 || k > 10) throw DomainError("crosscheck_u: indices must be <= 10");
    return numeric_crosscheck(st_u(j, k), [j, k](double t) { return trace_jk(AiryResolvent(t), j, k); }, ts);
}

double crosscheck_minor(const std::vector<int>& rows, const std::vector<int>& cols, const FForm& form,
                        const std::vector<double>& ts) {
    check_minor(rows, cols);
    for (int v : rows)
        if (v > 10) throw DomainError("crosscheck_minor: indices must be <= 10");
    for (int v : cols)
        if (v > 10) throw DomainError("crosscheck_minor: indices must be <= 10");
    auto target = [&](double t) {
        AiryResolvent R(t);
        return leibniz_det<double>(
            static_cast<int>(rows.size()), [&](int a, int b) { return trace_jk(R, rows[a], cols[b]); }, 1.0);
    };
    return numeric_crosscheck(form, target, ts);
}

}  // namespace lis
