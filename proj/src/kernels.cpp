#include "sck/kernels.hpp"

namespace sck {

Rational kernel_at(int n, int i, int j, const CharlierBasis& basis, const Rational& x0,
                   const Rational& y0) {
    Rational acc(0);
    for (int k = 0; k <= n; ++k) {
        const Rational vx = basis.C(k).delta_pow(i).eval(x0);
        if (vx == 0) continue;
        const Rational vy = basis.C(k).delta_pow(j).eval(y0);
        acc += vx * vy / basis.norm_sq(k);
    }
    return acc;
}

Rational kernel_at(int n, int i, int j, const Rational& a, const Rational& x0,
                   const Rational& y0) {
    return kernel_at(n, i, j, CharlierBasis(a, std::max(n, 0)), x0, y0);
}

Poly kernel_poly_x(int n, int j, const CharlierBasis& basis, const Rational& y0) {
    Poly acc;
    for (int k = 0; k <= n; ++k) {
        const Rational vy = basis.C(k).delta_pow(j).eval(y0);
        if (vy == 0) continue;
        acc += basis.C(k) * (vy / basis.norm_sq(k));
    }
    return acc;
}

Poly kernel_poly_x(int n, int j, const Rational& a, const Rational& y0) {
    return kernel_poly_x(n, j, CharlierBasis(a, std::max(n, 0)), y0);
}

RatFunc frak_c(int n, const CharlierBasis& basis, const Rational& c) {
    const Poly& Cn = basis.C(n);
    const Rational at_c = Cn.eval(c);
    const Rational dat_c = Cn.delta().eval(c);
    const Poly num = Poly(at_c) + Poly::x_minus(c) * dat_c;
    const Poly den = Poly::x_minus(c) * Poly::x_minus(c + 1);
    return RatFunc(num, den);
}

KernelClosedForm kernel_closed_form(int n, const CharlierBasis& basis, const Rational& c) {
    if (n < 1) throw InvalidParameter("kernel_closed_form requires n >= 1");
    const Rational inv_norm = Rational(1) / basis.norm_sq(n - 1);
    return {frak_c(n - 1, basis, c) * RatFunc(inv_norm),
            -(frak_c(n, basis, c) * RatFunc(inv_norm))};
}

KernelClosedForm kernel_closed_form(int n, const Rational& a, const Rational& c) {
    return kernel_closed_form(n, CharlierBasis(a, n), c);
}

} // namespace sck
