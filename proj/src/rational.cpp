#include "sck/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace sck {

namespace {

// Exact decimal/scientific parse: [-]ddd[.ddd][e[+-]ddd]
Rational parse_decimal(const std::string& s) {
    size_t pos = 0;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        neg = (s[pos] == '-');
        ++pos;
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_digit = false;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        digits += s[pos++];
        seen_digit = true;
    }
    if (pos < s.size() && s[pos] == '.') {
        ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            digits += s[pos++];
            ++frac_digits;
            seen_digit = true;
        }
    }
    long exp10 = 0;
    if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
        ++pos;
        bool eneg = false;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            eneg = (s[pos] == '-');
            ++pos;
        }
        if (pos >= s.size()) throw InvalidParameter("bad exponent in number: " + s);
        long e = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            e = e * 10 + (s[pos++] - '0');
        }
        exp10 = eneg ? -e : e;
    }
    if (!seen_digit || pos != s.size())
        throw InvalidParameter("cannot parse rational: " + s);

    // explicit base 10: a leading zero must not trigger octal auto-detection
    Integer mant(digits.empty() ? "0" : digits, 10);
    Rational r(mant);
    long net = exp10 - frac_digits;
    Integer ten10;
    mpz_ui_pow_ui(ten10.get_mpz_t(), 10, static_cast<unsigned long>(net < 0 ? -net : net));
    if (net >= 0)
        r *= Rational(ten10);
    else
        r /= Rational(ten10);
    if (neg) r = -r;
    r.canonicalize();
    return r;
}

} // namespace

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw InvalidParameter("empty rational string");
    if (s.find('/') != std::string::npos) {
        Rational r;
        if (r.set_str(s, 10) != 0)
            throw InvalidParameter("cannot parse rational: " + s);
        if (r.get_den() == 0) throw ZeroDenominator("zero denominator in: " + s);
        r.canonicalize();
        return r;
    }
    if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
        s.find('E') != std::string::npos) {
        return parse_decimal(s);
    }
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw InvalidParameter("cannot parse rational: " + s);
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Integer factorial(unsigned n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Rational rational_pow(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    if (base == 0 && exp < 0) throw DivisionByZero("0 raised to negative power");
    Rational r(1);
    Rational b = exp > 0 ? base : Rational(1) / base;
    for (long i = 0, e = exp > 0 ? exp : -exp; i < e; ++i) r *= b;
    return r;
}

double to_double(const Rational& r) {
    return r.get_d();
}

} // namespace sck
