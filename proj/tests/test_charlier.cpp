#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sck/charlier.hpp"
#include "sck/errors.hpp"

using namespace sck;

TEST_CASE("small Charlier polynomials from the recurrence") {
    const Rational a(2);
    CHECK(charlier_poly(0, a) == Poly::one());
    CHECK(charlier_poly(1, a) == Poly({-a, Rational(1)}));
    // C_2 = (x-1-a)C_1 - a C_0 = x^2 - (2a+1)x + a^2
    CHECK(charlier_poly(2, a) == Poly({a * a, Rational(-2) * a - 1, Rational(1)}));
    // recurrence holds at every degree
    for (int n = 1; n <= 6; ++n)
        CHECK(charlier_poly(n + 1, a) ==
              (Poly::x() - Poly(Rational(n) + a)) * charlier_poly(n, a) -
                  Rational(n) * a * charlier_poly(n - 1, a));
    CHECK(charlier_poly(5, a).leading() == 1);  // monic
}

TEST_CASE("basis cache matches free function") {
    const Rational a(7, 2);
    CharlierBasis b(a, 6);
    for (int n = 0; n <= 6; ++n) {
        CHECK(b.C(n) == charlier_poly(n, a));
        CHECK(b.norm_sq(n) == charlier_norm(n, a));
    }
    CHECK(b.C(-1).is_zero());
}

TEST_CASE("Stirling triangle and Poisson moments") {
    auto s = stirling2_triangle(5);
    CHECK(s[4][2] == 7);
    CHECK(s[5][3] == 25);
    CHECK(s[5][1] == 1);
    // m_k = sum_j S(k,j) a^j; check against a float series for a = 3/2
    const Rational a(3, 2);
    CHECK(poisson_moment(0, a) == 1);
    CHECK(poisson_moment(1, a) == a);
    CHECK(poisson_moment(2, a) == a + a * a);
    // m_3 = a + 3a^2 + a^3
    CHECK(poisson_moment(3, a) == a + 3 * a * a + a * a * a);
    // float cross-check: sum_{x>=0} x^4 e^-a a^x / x!
    double af = to_double(a), sum = 0, term = std::exp(-af);
    for (int x = 0; x < 80; ++x) {
        sum += std::pow(x, 4) * term;
        term *= af / (x + 1);
    }
    CHECK(std::abs(to_double(poisson_moment(4, a)) - sum) < 1e-9);
}

TEST_CASE("orthogonality and norms") {
    for (const Rational& a : {Rational(1, 3), Rational(1), Rational(7, 2)}) {
        CharlierBasis b(a, 10);
        for (int n = 0; n <= 10; ++n) {
            for (int m = 0; m < n; ++m)
                CHECK(classical_inner(b.C(n), b.C(m), a) == 0);
            CHECK(classical_inner(b.C(n), b.C(n), a) ==
                  Rational(factorial(static_cast<unsigned>(n))) * rational_pow(a, n));
        }
    }
}

TEST_CASE("first-order and structure relations") {
    const Rational a(5, 3);
    CharlierBasis b(a, 8);
    for (int n = 1; n <= 8; ++n) {
        CHECK(b.C(n).delta() == Rational(n) * b.C(n - 1));
        // x nabla C_n = n C_n + n a C_{n-1}
        const Poly lhs = Poly::x() * b.C(n).nabla();
        CHECK(lhs == Rational(n) * b.C(n) + Rational(n) * a * b.C(n - 1));
    }
}

TEST_CASE("both classical difference equations") {
    const Rational a(2);
    CharlierBasis b(a, 7);
    for (int n = 0; n <= 7; ++n) {
        const Poly& C = b.C(n);
        // a Delta nabla C + (a - x) nabla... standard form:
        //   a C(x+1) - (x + a) C(x) + x C(x-1) + n C(x) = 0
        const Poly r = a * C.shift(Rational(1)) -
                       (Poly::x() + Poly(a)) * C + Poly::x() * C.shift(Rational(-1)) +
                       Rational(n) * C;
        CHECK(r.is_zero());
        // equivalent divided form: x Delta nabla C + (a - x) Delta C + n C = 0
        const Poly r2 = Poly::x() * C.delta().nabla() +
                        (Poly(a) - Poly::x()) * C.delta() + Rational(n) * C;
        CHECK(r2.is_zero());
    }
}

TEST_CASE("terminating 2F0 evaluation agrees with the polynomial") {
    const Rational a(3, 4);
    for (int n = 0; n <= 6; ++n) {
        const Poly C = charlier_poly(n, a);
        for (const Rational& x : {Rational(0), Rational(3), Rational(-5, 2), Rational(11, 3)})
            CHECK(charlier_hyper_eval(n, a, x) == C.eval(x));
    }
}
