#include "lis/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace lis {

std::string to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

QPoly::QPoly(std::vector<Rat> c) : c_(std::move(c)) { trim(); }

QPoly::QPoly(const Rat& c) {
    if (c != 0) c_.push_back(c);
}

QPoly QPoly::monomial(const Rat& c, int deg) {
    std::vector<Rat> v(deg + 1, Rat(0));
    v[deg] = c;
    return QPoly(std::move(v));
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat QPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
    return c_[k];
}

QPoly QPoly::derivative() const {
    if (c_.size() <= 1) return QPoly();
    std::vector<Rat> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
    return QPoly(std::move(d));
}

double QPoly::eval(double x) const {
    double s = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * x + it->get_d();
    return s;
}

Rat QPoly::eval(const Rat& x) const {
    Rat s(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * x + *it;
    return s;
}

QPoly QPoly::operator-() const {
    QPoly r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

QPoly& QPoly::operator*=(const Rat& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return QPoly(std::move(r));
}

std::string QPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        std::string term = to_string(c_[k]);
        if (k == 1) term += "*" + var;
        else if (k > 1) term += "*" + var + "^" + std::to_string(k);
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw std::domain_error("QPoly divmod: division by zero");
    std::vector<Rat> r = a.coeffs();
    const int db = b.degree();
    const int dq = a.degree() - db;
    if (dq < 0) return {QPoly(), a};
    std::vector<Rat> q(dq + 1, Rat(0));
    const Rat lead = b.coeffs().back();
    for (int k = dq; k >= 0; --k) {
        Rat c = r[k + db] / lead;
        if (c == 0) continue;
        q[k] = c;
        for (int i = 0; i <= db; ++i) r[k + i] -= c * b.coeffs()[i];
    }
    return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (Rat(1) / a.coeffs().back());
}

}  // namespace lis
