#include "sck/ratfunc.hpp"

namespace sck {

RatFunc::RatFunc(Poly num, Poly den) {
    if (den.is_zero()) throw ZeroDenominator("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = Poly();
        den_ = Poly::one();
        return;
    }
    Poly g = poly_gcd(num, den);
    num = num.exact_div(g);
    den = den.exact_div(g);
    const Rational lead = den.leading();
    num_ = num * (Rational(1) / lead);
    den_ = den * (Rational(1) / lead);
}

RatFunc ratfunc_reduce(const Poly& num, const Poly& den) {
    return RatFunc(num, den);
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw DivisionByZero("rational function division by zero");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

bool RatFunc::operator==(const RatFunc& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

RatFunc RatFunc::shift(const Rational& t) const {
    return RatFunc(num_.shift(t), den_.shift(t));
}

RatFunc RatFunc::delta() const {
    const Poly df = num_.delta();
    const Poly dg = den_.delta();
    return RatFunc(den_ * df - num_ * dg, den_ * (den_ + dg));
}

RatFunc RatFunc::nabla() const {
    return *this - shift(Rational(-1));
}

Rational RatFunc::eval(const Rational& at) const {
    const Rational d = den_.eval(at);
    if (d == 0) throw PoleAtEvaluation("rational function pole at x = " + rational_to_string(at));
    return num_.eval(at) / d;
}

std::string RatFunc::to_string() const {
    if (den_ == Poly::one()) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

RatFunc operator*(const Rational& s, const RatFunc& f) {
    return RatFunc(s) * f;
}

RatFunc operator*(const Poly& p, const RatFunc& f) {
    return RatFunc(p) * f;
}

} // namespace sck
