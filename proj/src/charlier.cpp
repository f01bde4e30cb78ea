#include "sck/charlier.hpp"

namespace sck {

Poly charlier_poly(int n, const Rational& a) {
    if (a <= 0) throw InvalidParameter("Charlier parameter a must be positive");
    if (n < 0) return Poly();
    Poly prev;            // C_{-1}
    Poly cur = Poly::one(); // C_0
    for (int k = 0; k < n; ++k) {
        // C_{k+1} = (x - k - a) C_k - k a C_{k-1}
        Poly next = Poly::x_minus(Rational(k) + a) * cur - Rational(k) * a * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Rational charlier_norm(int n, const Rational& a) {
    if (a <= 0) throw InvalidParameter("Charlier parameter a must be positive");
    if (n < 0) throw InvalidParameter("charlier_norm: n must be nonnegative");
    return Rational(factorial(static_cast<unsigned>(n))) * rational_pow(a, n);
}

CharlierBasis::CharlierBasis(Rational a, int max_n) : a_(std::move(a)) {
    if (a_ <= 0) throw InvalidParameter("Charlier parameter a must be positive");
    if (max_n < 0) max_n = 0;
    polys_.reserve(static_cast<size_t>(max_n) + 1);
    norms_.reserve(static_cast<size_t>(max_n) + 1);
    Poly prev;
    Poly cur = Poly::one();
    for (int k = 0; k <= max_n; ++k) {
        polys_.push_back(cur);
        norms_.push_back(charlier_norm(k, a_));
        Poly next = Poly::x_minus(Rational(k) + a_) * cur - Rational(k) * a_ * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
}

const Poly& CharlierBasis::C(int n) const {
    if (n < 0) return zero_;
    if (n > max_n()) throw InvalidParameter("CharlierBasis: index beyond cached range");
    return polys_[static_cast<size_t>(n)];
}

const Rational& CharlierBasis::norm_sq(int n) const {
    if (n < 0 || n > max_n()) throw InvalidParameter("CharlierBasis: bad norm index");
    return norms_[static_cast<size_t>(n)];
}

std::vector<std::vector<Integer>> stirling2_triangle(int max_k) {
    std::vector<std::vector<Integer>> s(static_cast<size_t>(max_k) + 1);
    for (int k = 0; k <= max_k; ++k) {
        s[static_cast<size_t>(k)].assign(static_cast<size_t>(k) + 1, Integer(0));
        s[static_cast<size_t>(k)][0] = (k == 0) ? 1 : 0;
        for (int j = 1; j <= k; ++j) {
            // S(k,j) = j S(k-1,j) + S(k-1,j-1)
            Integer v = s[static_cast<size_t>(k - 1)][static_cast<size_t>(j - 1)];
            if (j <= k - 1) v += Integer(j) * s[static_cast<size_t>(k - 1)][static_cast<size_t>(j)];
            s[static_cast<size_t>(k)][static_cast<size_t>(j)] = v;
        }
    }
    return s;
}

Rational poisson_moment(int k, const Rational& a) {
    if (a <= 0) throw InvalidParameter("poisson_moment: a must be positive");
    if (k < 0) throw InvalidParameter("poisson_moment: k must be nonnegative");
    const auto tri = stirling2_triangle(k);
    Rational m(0);
    Rational apow(1);
    for (int j = 0; j <= k; ++j) {
        if (j > 0) apow *= a;
        m += Rational(tri[static_cast<size_t>(k)][static_cast<size_t>(j)]) * apow;
    }
    return m;
}

Rational classical_inner(const Poly& p, const Poly& q, const Rational& a) {
    const Poly prod = p * q;
    if (prod.is_zero()) return Rational(0);
    const auto tri = stirling2_triangle(prod.degree());
    Rational acc(0);
    for (int k = 0; k <= prod.degree(); ++k) {
        Rational m(0);
        Rational apow(1);
        for (int j = 0; j <= k; ++j) {
            if (j > 0) apow *= a;
            m += Rational(tri[static_cast<size_t>(k)][static_cast<size_t>(j)]) * apow;
        }
        acc += prod.coeff(k) * m;
    }
    return acc;
}

Rational charlier_hyper_eval(int n, const Rational& a, const Rational& x) {
    if (a <= 0) throw InvalidParameter("Charlier parameter a must be positive");
    // (-a)^n sum_k (-n)_k (-x)_k (-1/a)^k / k!
    Rational sum(0);
    Rational term(1); // (-n)_0 (-x)_0 (-1/a)^0 / 0!
    const Rational z = Rational(-1) / a;
    for (int k = 0;; ++k) {
        sum += term;
        if (k >= n) break;
        term *= (Rational(-n) + k) * (-x + k) * z / Rational(k + 1);
    }
    return rational_pow(-a, n) * sum;
}

} // namespace sck
