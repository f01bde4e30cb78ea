#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sck/charlier.hpp"
#include "sck/kernels.hpp"

using namespace sck;

TEST_CASE("kernel values telescope") {
    const Rational a(5, 2), x0(3, 7), y0(-2);
    CharlierBasis b(a, 8);
    CHECK(kernel_at(-1, 0, 0, b, x0, y0) == 0);
    for (int n = 0; n <= 7; ++n)
        for (int i = 0; i <= 1; ++i)
            for (int j = 0; j <= 1; ++j) {
                const Poly dx = b.C(n).delta_pow(i);
                const Poly dy = b.C(n).delta_pow(j);
                CHECK(kernel_at(n, i, j, b, x0, y0) - kernel_at(n - 1, i, j, b, x0, y0) ==
                      dx.eval(x0) * dy.eval(y0) / b.norm_sq(n));
            }
}

TEST_CASE("symmetry of the kernel") {
    const Rational a(1, 3);
    CharlierBasis b(a, 6);
    for (const auto& [x0, y0] : {std::pair{Rational(1), Rational(4)},
                                 {Rational(-3, 2), Rational(5, 4)}})
        for (int n = 0; n <= 6; ++n) {
            CHECK(kernel_at(n, 0, 0, b, x0, y0) == kernel_at(n, 0, 0, b, y0, x0));
            CHECK(kernel_at(n, 1, 0, b, x0, y0) == kernel_at(n, 0, 1, b, y0, x0));
        }
}

TEST_CASE("partial-x kernel polynomial evaluates to the pointwise kernel") {
    const Rational a(2), y0(-5);
    CharlierBasis b(a, 9);
    std::mt19937_64 rng(123);
    std::uniform_int_distribution<int> num(-30, 30), den(1, 7);
    for (int n = 0; n <= 8; ++n)
        for (int j = 0; j <= 1; ++j) {
            const Poly K = kernel_poly_x(n, j, b, y0);
            for (int t = 0; t < 20; ++t) {
                Rational x0(num(rng), den(rng));
                x0.canonicalize();
                CHECK(K.eval(x0) == kernel_at(n, 0, j, b, x0, y0));
            }
        }
}

TEST_CASE("Christoffel-Darboux style closed form for K^{(0,1)}") {
    // K_{n-1}^{(0,1)}(x,c) written as rational multiples of C_n, C_{n-1}
    const Rational a(3, 2), c(-2);
    CharlierBasis b(a, 8);
    for (int n = 1; n <= 7; ++n) {
        const auto cf = kernel_closed_form(n, b, c);
        const RatFunc direct = RatFunc(kernel_poly_x(n - 1, 1, b, c));
        const RatFunc assembled = cf.coeff_Cn * RatFunc(b.C(n)) +
                                  cf.coeff_Cnm1 * RatFunc(b.C(n - 1));
        CHECK(direct == assembled);
    }
}

TEST_CASE("frak_c carrier") {
    const Rational a(1), c(-5);
    CharlierBasis b(a, 5);
    for (int n = 0; n <= 4; ++n) {
        const RatFunc f = frak_c(n, b, c);
        // numerator value at x = c + 2: C_n(c) + 2 Delta C_n(c)
        const Rational dc = b.C(n).eval(c + 1) - b.C(n).eval(c);
        CHECK(f.eval(c + 2) == (b.C(n).eval(c) + 2 * dc) / Rational(2));
    }
}
