#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sck/charlier.hpp"
#include "sck/errors.hpp"
#include "sck/kernels.hpp"
#include "sck/sobolev.hpp"
#include "sck/zeros.hpp"

using namespace sck;

TEST_CASE("parameter domain") {
    CHECK(validate({3, Rational(1), Rational(2), Rational(1)}).algebra_ok);
    CHECK(validate({3, Rational(1), Rational(0), Rational(1)}).algebra_ok);
    CHECK(validate({3, Rational(1), Rational(-1), Rational(1)}).algebra_ok);
    CHECK(validate({3, Rational(1), Rational(-7, 2), Rational(1)}).algebra_ok);
    CHECK_FALSE(validate({3, Rational(1), Rational(-1, 2), Rational(1)}).algebra_ok);
    CHECK_FALSE(validate({3, Rational(1), Rational(5, 2), Rational(1)}).algebra_ok);
    CHECK_FALSE(validate({3, Rational(1), Rational(-1), Rational(1)}).zeros_ok);
    CHECK(validate({3, Rational(1), Rational(-2), Rational(1)}).zeros_ok);
    CHECK_THROWS_AS(require_algebra_ok({3, Rational(-1), Rational(-2), Rational(1)}),
                    InvalidParameter);
    CHECK_THROWS_AS(require_algebra_ok({3, Rational(1), Rational(-2), Rational(-1)}),
                    InvalidParameter);
    // unreduced gmp rationals are rejected rather than silently mis-compared
    Rational bad(2, 4);
    CHECK_THROWS_AS(validate({3, bad, Rational(-2), Rational(1)}), InvalidParameter);
}

TEST_CASE("lambda = 0 and n = 0 degenerate to the classical family") {
    const Params p0{5, Rational(3), Rational(-2), Rational(0)};
    CHECK(q_poly(p0) == charlier_poly(5, Rational(3)));
    const Params pn0{0, Rational(3), Rational(-2), Rational(7)};
    CHECK(q_poly(pn0) == Poly::one());
}

TEST_CASE("the construction routes agree and are Sobolev-orthogonal") {
    for (const auto& [n, a, c, l] :
         {std::tuple{1, Rational(1), Rational(-1), Rational(3)},
          {2, Rational(1, 3), Rational(-2), Rational(1, 7)},
          {5, Rational(7, 2), Rational(-5), Rational(100)},
          {6, Rational(2), Rational(4), Rational(5, 9)}}) {
        const Params p{n, a, c, l};
        const SobolevPoly sp = q_poly_kernel(p);
        CHECK(sp.poly == q_poly_connection(p).Q);
        CHECK(sp.poly.leading() == 1);
        CHECK(sp.poly.degree() == n);
        for (int k = 0; k < n; ++k) {
            Params pk = p;
            pk.n = k;
            CHECK(sobolev_inner(sp.poly, q_poly(pk), p) == 0);
        }
        CHECK(sobolev_inner(sp.poly, sp.poly, p) == q_norm(p));
        // norm identity ||Q_n||^2 = b_n n! a^n
        CHECK(q_norm(p) == sp.b_n * charlier_norm(n, a));
        CHECK(sp.b_n >= 1);
    }
}

TEST_CASE("Delta Q at the mass point") {
    const Params p{4, Rational(5, 4), Rational(-5), Rational(3)};
    const CharlierBasis basis(p.a, p.n);
    const Poly q = q_poly(p);
    const Rational lhs = q.eval(p.c + 1) - q.eval(p.c);
    CHECK(lhs == delta_q_at_c(p, basis));
}

TEST_CASE("a_n, b_n bookkeeping") {
    const Params p{3, Rational(2), Rational(-5), Rational(1, 2)};
    const CharlierBasis basis(p.a, p.n + 1);
    const auto ab = an_bn(p);
    CHECK(ab.b_n == (1 + p.lambda * k11(p.n, basis, p.c)) /
                        (1 + p.lambda * k11(p.n - 1, basis, p.c)));
    CHECK(ab.a_n == basis.C(p.n + 1).eval(p.c) / basis.C(p.n).eval(p.c));
}

TEST_CASE("two-term connection coefficient routes agree") {
    for (const auto& [n, a, c, l] : {std::tuple{2, Rational(2), Rational(-5), Rational(1, 7)},
                                     {6, Rational(1, 2), Rational(-15), Rational(9)}}) {
        const Params p{n, a, c, l};
        const auto closed = prop2_coeffs(p);
        const auto direct = prop2_coeffs_direct(p);
        CHECK(closed.A11 == direct.A11);
        CHECK(closed.A10 == direct.A10);
        CHECK(closed.B11 == direct.B11);
        CHECK(closed.B10 == direct.B10);
    }
    //  n = 1: A11 carries a factor gamma_0 = 0
    const Params p1{1, Rational(3), Rational(-2), Rational(4)};
    CHECK(prop2_coeffs(p1).A11 == 0);
    CHECK(prop2_coeffs_direct(p1).A11 == 0);
}

TEST_CASE("five-Charlier expansion of the annulus product") {
    for (const auto& [n, a, c, l] : {std::tuple{2, Rational(1), Rational(-1), Rational(2)},
                                     {5, Rational(5, 3), Rational(-5), Rational(1, 11)}}) {
        const Params p{n, a, c, l};
        const SigmaCoeffs s = five_charlier_expansion(p);
        const SigmaCoeffs s2 = five_charlier_expansion_explicit(p);
        CHECK(s.s1 == s2.s1);
        CHECK(s.s0 == s2.s0);
        CHECK(s.sm1 == s2.sm1);
        CHECK(s.sm2 == s2.sm2);
        const CharlierBasis b(a, n + 2);
        const Poly lhs = Poly::x_minus(c) * Poly::x_minus(c + 1) * q_poly(p);
        const Poly rhs = b.C(n + 2) + s.s1 * b.C(n + 1) + s.s0 * b.C(n) +
                         s.sm1 * b.C(n - 1) + s.sm2 * b.C(n - 2);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("hypergeometric evaluation, pre-normalized form") {
    const Params p{5, Rational(17, 50), Rational(2), Rational(100)};
    const Poly q = q_poly(p);
    for (const Rational& x : {Rational(0), Rational(1), Rational(7, 3), Rational(-4)})
        CHECK(hypergeometric_eval(p, x) == q.eval(x));
    // the mass point itself is a removable singularity of the representation
    CHECK_THROWS_AS(hypergeometric_eval(p, p.c), PoleAtEvaluation);
}

TEST_CASE("hypergeometric evaluation, strict 3F1 form") {
    const Params p{4, Rational(2), Rational(-5), Rational(1, 7)};
    const Poly q = q_poly(p);
    int evaluated = 0;
    for (const Rational& x :
         {Rational(1, 2), Rational(7, 3), Rational(-3, 2), Rational(13, 4)}) {
        try {
            CHECK(hypergeometric_eval(p, x, true) == q.eval(x));
            ++evaluated;
        } catch (const PoleAtEvaluation&) {
            // lower-parameter poles are legitimate for the strict form
        }
    }
    CHECK(evaluated >= 2);
}

TEST_CASE("kernel-limit representation against the limit polynomial") {
    for (const auto& [n, a, c, l] : {std::tuple{3, Rational(2), Rational(-5), Rational(4)},
                                     {7, Rational(1, 2), Rational(-2), Rational(1, 9)}}) {
        const Params p{n, a, c, l};
        const CharlierBasis basis(a, n);
        const Rational K = kernel_at(n - 1, 1, 1, basis, c, c);
        const Poly lhs = (1 + l * K) * q_poly(p);
        const Poly rhs = basis.C(n) + (l * K) * limit_poly(n, a, c);
        CHECK(lhs == rhs);
    }
}
