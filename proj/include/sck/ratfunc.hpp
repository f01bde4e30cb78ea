#pragma once

#include "sck/poly.hpp"

namespace sck {

/// Reduced rational function: gcd(num, den) = 1 and den monic, so the
/// representation is canonical and equality is decidable.
class RatFunc {
  public:
    RatFunc() : num_(), den_(Poly::one()) {}
    explicit RatFunc(Rational constant) : num_(Poly(std::move(constant))), den_(Poly::one()) {}
    explicit RatFunc(Poly num) : num_(std::move(num)), den_(Poly::one()) {}
    RatFunc(Poly num, Poly den);

    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(Rational(1)); }
    static RatFunc x() { return RatFunc(Poly::x()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    /// Cross-multiplication equality of reduced forms.
    bool operator==(const RatFunc& o) const;

    /// f(x + t)
    RatFunc shift(const Rational& t) const;
    /// Forward difference via the discrete quotient rule
    /// (g Δf - f Δg) / (g (g + Δg)); agrees with shift(1) - *this.
    RatFunc delta() const;
    RatFunc nabla() const;

    Rational eval(const Rational& at) const;

    std::string to_string() const;

  private:
    Poly num_;
    Poly den_;
};

RatFunc operator*(const Rational& s, const RatFunc& f);
RatFunc operator*(const Poly& p, const RatFunc& f);

/// Reduce num/den to canonical form. Throws ZeroDenominator.
RatFunc ratfunc_reduce(const Poly& num, const Poly& den);

} // namespace sck
