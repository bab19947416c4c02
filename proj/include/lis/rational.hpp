#pragma once

// Exact rationals and dense univariate polynomials over them.

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace lis {

using Rat = mpq_class;
using BigInt = mpz_class;

std::string to_string(const Rat& r);

/// Dense polynomial with rational coefficients, ascending powers, no trailing zeros.
class QPoly {
  public:
    QPoly() = default;
    explicit QPoly(std::vector<Rat> c);
    QPoly(const Rat& c);  // constant
    static QPoly monomial(const Rat& c, int deg);
    static QPoly variable() { return monomial(Rat(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int k) const;

    QPoly derivative() const;
    double eval(double x) const;
    Rat eval(const Rat& x) const;

    QPoly operator-() const;
    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const Rat& s);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(QPoly a, const Rat& s) { return a *= s; }
    friend QPoly operator*(const Rat& s, QPoly a) { return a *= s; }
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    /// "c0 + c1*t + c2*t^2" with terms of zero coefficient omitted.
    std::string str(const std::string& var = "t") const;

  private:
    void trim();
    std::vector<Rat> c_;
};

/// Quotient and remainder of a by b (b nonzero).
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
/// Monic greatest common divisor; gcd(0, 0) = 0.
QPoly gcd(QPoly a, QPoly b);

}  // namespace lis
