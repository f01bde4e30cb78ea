#pragma once

#include "sck/charlier.hpp"
#include "sck/ratfunc.hpp"

namespace sck {

/// K_n^{(i,j)}(x0, y0) = sum_{k<=n} D^i C_k(x0) D^j C_k(y0) / ||C_k||^2.
/// n = -1 gives the empty sum 0.
Rational kernel_at(int n, int i, int j, const CharlierBasis& basis, const Rational& x0,
                   const Rational& y0);
Rational kernel_at(int n, int i, int j, const Rational& a, const Rational& x0,
                   const Rational& y0);

/// Kernel with a free first variable: sum_{k<=n} C_k(x) D^j C_k(y0) / ||C_k||^2.
Poly kernel_poly_x(int n, int j, const CharlierBasis& basis, const Rational& y0);
Poly kernel_poly_x(int n, int j, const Rational& a, const Rational& y0);

/// (C_n(c) + (x-c) DC_n(c)) / ((x-c)(x-c-1)) -- the coefficient germ of the
/// closed kernel form.
RatFunc frak_c(int n, const CharlierBasis& basis, const Rational& c);

/// Closed form of K_{n-1}^{(0,1)}(x, c): the returned pair (f, g) satisfies
/// K_{n-1}^{(0,1)}(x, c) = f(x) C_n(x) + g(x) C_{n-1}(x). Requires n >= 1.
struct KernelClosedForm {
    RatFunc coeff_Cn;
    RatFunc coeff_Cnm1;
};
KernelClosedForm kernel_closed_form(int n, const CharlierBasis& basis, const Rational& c);
KernelClosedForm kernel_closed_form(int n, const Rational& a, const Rational& c);

} // namespace sck
