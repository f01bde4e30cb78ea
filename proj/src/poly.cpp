#include "sck/poly.hpp"

#include <sstream>

namespace sck {

Poly::Poly(Rational constant) : coeffs_{std::move(constant)} {
    normalize();
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {
    normalize();
}

Poly Poly::x() {
    return Poly{Rational(0), Rational(1)};
}

Poly Poly::x_minus(const Rational& r) {
    return Poly{-r, Rational(1)};
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<size_t>(k)];
}

Rational Poly::leading() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational Poly::eval(const Rational& at) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Poly Poly::shift(const Rational& t) const {
    // Horner form of p(x + t): fold coefficients from the top, multiplying
    // the running polynomial by (x + t) each step.
    Poly acc;
    const Poly xt{t, Rational(1)};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * xt + Poly(*it);
    return acc;
}

Poly Poly::delta() const {
    return shift(Rational(1)) - *this;
}

Poly Poly::nabla() const {
    return *this - shift(Rational(-1));
}

Poly Poly::delta_pow(int k) const {
    Poly p = *this;
    for (int i = 0; i < k; ++i) p = p.delta();
    return p;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<Rational> d(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k)
        d[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
    return Poly(std::move(d));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rational(1) / leading());
}

Poly Poly::operator-() const {
    std::vector<Rational> r(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) r[i] = -coeffs_[i];
    return Poly(std::move(r));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> r(std::max(coeffs_.size(), o.coeffs_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    return *this + (-o);
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    return Poly(std::move(r));
}

Poly Poly::operator*(const Rational& s) const {
    std::vector<Rational> r(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) r[i] = coeffs_[i] * s;
    return Poly(std::move(r));
}

Poly operator*(const Rational& s, const Poly& p) {
    return p * s;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    Poly rem = *this;
    if (rem.degree() < d.degree()) return {Poly(), rem};
    std::vector<Rational> q(static_cast<size_t>(rem.degree() - d.degree()) + 1, Rational(0));
    const Rational lead = d.leading();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        const int k = rem.degree() - d.degree();
        const Rational c = rem.leading() / lead;
        q[static_cast<size_t>(k)] = c;
        std::vector<Rational> sub(static_cast<size_t>(k), Rational(0));
        sub.push_back(c);
        rem -= d * Poly(std::move(sub));
    }
    return {Poly(std::move(q)), rem};
}

Poly Poly::exact_div(const Poly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero())
        throw NonZeroRemainder("inexact polynomial division, remainder " + r.to_string());
    return q;
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = r.monic(); // keep coefficients tame
    }
    return a.monic();
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<size_t>(k)];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rational ac = abs(c);
        if (ac != 1 || k == 0) os << ac.get_str();
        if (k > 0) {
            if (ac != 1) os << "*";
            os << "x";
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

std::vector<std::string> Poly::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(rational_to_string(c));
    return out;
}

Poly Poly::from_coeff_strings(const std::vector<std::string>& cs) {
    std::vector<Rational> v;
    v.reserve(cs.size());
    for (const auto& s : cs) v.push_back(rational_from_string(s));
    return Poly(std::move(v));
}

} // namespace sck
