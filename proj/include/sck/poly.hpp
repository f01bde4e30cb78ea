#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "sck/rational.hpp"

namespace sck {

/// Dense univariate polynomial over Rational. The coefficient vector never
/// carries trailing zeros; the zero polynomial is the empty vector and its
/// degree() is the sentinel -1.
class Poly {
  public:
    Poly() = default;
    explicit Poly(Rational constant);
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs);

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(Rational(1)); }
    static Poly x();
    /// x - r
    static Poly x_minus(const Rational& r);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int k) const;
    Rational leading() const;

    Rational eval(const Rational& at) const;

    /// p(x + t), exact Taylor shift.
    Poly shift(const Rational& t) const;
    /// Forward difference p(x+1) - p(x).
    Poly delta() const;
    /// Backward difference p(x) - p(x-1).
    Poly nabla() const;
    Poly delta_pow(int k) const;
    /// d/dx, used only on the float side of the zero analysis.
    Poly derivative() const;

    Poly monic() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& s) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

    /// Quotient and remainder of Euclidean division.
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    /// Division known to be exact; throws NonZeroRemainder otherwise,
    /// which signals a broken identity upstream.
    Poly exact_div(const Poly& d) const;

    std::string to_string() const;
    /// JSON-friendly form: array of "p/q" strings, index = power of x.
    std::vector<std::string> coeff_strings() const;
    static Poly from_coeff_strings(const std::vector<std::string>& cs);

  private:
    void normalize();
    std::vector<Rational> coeffs_;
};

Poly operator*(const Rational& s, const Poly& p);

/// Monic gcd over Rational[x]; gcd(0,0) = 0.
Poly poly_gcd(Poly a, Poly b);

} // namespace sck
