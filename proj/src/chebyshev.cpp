#include "lis/chebyshev.hpp"

#include "lis/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace lis {

std::vector<double> ChebModel::points(int n, double a, double b) {
    std::vector<double> x(n);
    for (int j = 0; j < n; ++j) {
        double c = std::cos(std::numbers::pi * j / (n - 1));
        x[j] = 0.5 * (a + b) + 0.5 * (b - a) * c;
    }
    return x;
}

ChebModel ChebModel::fit(const std::function<double(double)>& f, double a, double b, int n, int deriv_limit,
                         bool chop) {
    auto x = points(n, a, b);
    std::vector<double> v(n);
    for (int j = 0; j < n; ++j) v[j] = f(x[j]);
    return from_samples(v, a, b, deriv_limit, chop);
}

ChebModel ChebModel::from_samples(const std::vector<double>& v, double a, double b, int deriv_limit, bool chop) {
    const int n = static_cast<int>(v.size());
    if (n < 2 || !(a < b)) throw DomainError("ChebModel: need n >= 2 and a < b");
    const int N = n - 1;
    // discrete cosine transform (type I)
    std::vector<double> c(n, 0.0);
    for (int k = 0; k <= N; ++k) {
        double s = 0.0;
        for (int j = 0; j <= N; ++j) {
            double w = (j == 0 || j == N) ? 0.5 : 1.0;
            s += w * v[j] * std::cos(std::numbers::pi * static_cast<double>(k) * j / N);
        }
        c[k] = 2.0 * s / N;
    }
    c[0] *= 0.5;
    c[N] *= 0.5;
    if (chop) {
        // drop the rounding plateau: cut after the last coefficient above tol * max
        double mx = 0.0;
        for (double e : c) mx = std::max(mx, std::fabs(e));
        const double tol = 1e-15 * mx;
        std::size_t first_small = c.size();
        for (std::size_t k = 0; k + 3 < c.size(); ++k) {
            if (std::fabs(c[k]) < tol && std::fabs(c[k + 1]) < tol && std::fabs(c[k + 2]) < tol) {
                first_small = k;
                break;
            }
        }
        c.resize(std::max<std::size_t>(first_small, 1));
    }
    ChebModel m;
    m.a_ = a;
    m.b_ = b;
    m.d_.push_back(c);
    const double scale = 2.0 / (b - a);
    for (int order = 1; order <= deriv_limit; ++order) {
        const auto& p = m.d_.back();
        const int len = static_cast<int>(p.size());
        std::vector<double> q(std::max(len - 1, 1), 0.0);
        // c'_{k-1} = c'_{k+1} + 2k c_k
        for (int k = len - 1; k >= 1; --k) {
            double next = (k + 1 < len - 1) ? q[k + 1] : 0.0;
            q[k - 1] = next + 2.0 * k * p[k];
        }
        q[0] *= 0.5;
        for (double& e : q) e *= scale;
        m.d_.push_back(q);
    }
    return m;
}

double ChebModel::operator()(double x, int k) const {
    const auto& c = d_.at(k);
    double u = (2.0 * x - (a_ + b_)) / (b_ - a_);
    // Clenshaw
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t j = c.size(); j-- > 1;) {
        double t = 2.0 * u * b1 - b2 + c[j];
        b2 = b1;
        b1 = t;
    }
    return u * b1 - b2 + c[0];
}

double ChebModel::tail_ratio() const {
    const auto& c = d_.front();
    double mx = 0.0;
    for (double v : c) mx = std::max(mx, std::fabs(v));
    std::size_t start = c.size() - std::max<std::size_t>(1, c.size() / 10);
    double tail = 0.0;
    for (std::size_t j = start; j < c.size(); ++j) tail = std::max(tail, std::fabs(c[j]));
    return mx > 0 ? tail / mx : 0.0;
}

}  // namespace lis
