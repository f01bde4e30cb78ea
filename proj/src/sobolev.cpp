#include "sck/sobolev.hpp"

namespace sck {

namespace {

bool is_nonneg_integer(const Rational& c) {
    return c >= 0 && c.get_den() == 1;
}

} // namespace

namespace {

// gmp rationals built as mpq_class(p, q) are NOT reduced automatically, and
// every exact comparison downstream silently misbehaves on unreduced values.
// Catch that at the entry points instead.
bool is_canonical(const Rational& r) {
    Rational t = r;
    t.canonicalize();
    return t.get_num() == r.get_num() && t.get_den() == r.get_den();
}

}  // namespace

ValidityReport validate(const Params& params) {
    if (!is_canonical(params.a) || !is_canonical(params.c) ||
        !is_canonical(params.lambda))
        throw InvalidParameter(
            "rational parameters must be canonicalized (mpq_class::canonicalize)");
    ValidityReport r;
    r.algebra_ok = is_nonneg_integer(params.c) || params.c <= -1;
    r.zeros_ok = params.c < -1;
    return r;
}

void require_algebra_ok(const Params& params) {
    if (params.n < 0) throw InvalidParameter("n must be nonnegative");
    if (params.a <= 0) throw InvalidParameter("a must be positive");
    if (params.lambda < 0) throw InvalidParameter("lambda must be nonnegative");
    if (!validate(params).algebra_ok)
        throw InvalidParameter("(c, c+1) intersects the Poisson spectrum, c = " +
                               rational_to_string(params.c));
}

Rational sobolev_inner(const Poly& p, const Poly& q, const Params& params) {
    require_algebra_ok(params);
    const Rational classical = classical_inner(p, q, params.a);
    if (params.lambda == 0) return classical;
    return classical + params.lambda * p.delta().eval(params.c) * q.delta().eval(params.c);
}

Rational k11(int n, const CharlierBasis& basis, const Rational& c) {
    return kernel_at(n, 1, 1, basis, c, c);
}

Rational a_ratio(int n, const CharlierBasis& basis, const Rational& c) {
    const Rational den = basis.C(n).eval(c);
    if (den == 0)
        throw DivisionByZero("a_n undefined: C_" + std::to_string(n) + "(c) = 0");
    return basis.C(n + 1).eval(c) / den;
}

AnBn an_bn(const Params& params) {
    require_algebra_ok(params);
    const CharlierBasis basis(params.a, params.n + 1);
    AnBn out;
    if (basis.C(params.n).eval(params.c) != 0)
        out.a_n = a_ratio(params.n, basis, params.c);
    out.b_n = (Rational(1) + params.lambda * k11(params.n, basis, params.c)) /
              (Rational(1) + params.lambda * k11(params.n - 1, basis, params.c));
    return out;
}

Rational delta_q_at_c(const Params& params, const CharlierBasis& basis) {
    return basis.C(params.n).delta().eval(params.c) /
           (Rational(1) + params.lambda * k11(params.n - 1, basis, params.c));
}

SobolevPoly q_poly_kernel(const Params& params) {
    require_algebra_ok(params);
    const int n = params.n;
    const CharlierBasis basis(params.a, n);
    SobolevPoly out;
    out.params = params;
    out.b_n = (Rational(1) + params.lambda * k11(n, basis, params.c)) /
              (Rational(1) + params.lambda * k11(n - 1, basis, params.c));
    out.norm_sq = charlier_norm(n, params.a) * out.b_n;
    if (n == 0 || params.lambda == 0) {
        out.poly = basis.C(n);
        return out;
    }
    const Rational factor = params.lambda * delta_q_at_c(params, basis);
    out.poly = basis.C(n) - kernel_poly_x(n - 1, 1, basis, params.c) * factor;
    return out;
}

Poly q_poly(const Params& params) {
    return q_poly_kernel(params).poly;
}

ConnectionCoeffs connection_coeffs(const Params& params, const CharlierBasis& basis) {
    if (params.n < 1) throw IndexTooSmall("connection formula requires n >= 1");
    const int n = params.n;
    const Rational w = params.lambda * delta_q_at_c(params, basis) / basis.norm_sq(n - 1);
    ConnectionCoeffs cc;
    cc.A1 = RatFunc::one() - RatFunc(w) * frak_c(n - 1, basis, params.c);
    cc.B1 = RatFunc(w) * frak_c(n, basis, params.c);
    return cc;
}

ConnectionCoeffs connection_coeffs(const Params& params) {
    require_algebra_ok(params);
    return connection_coeffs(params, CharlierBasis(params.a, params.n));
}

ConnectionResult q_poly_connection(const Params& params) {
    require_algebra_ok(params);
    if (params.n < 1) throw IndexTooSmall("connection formula requires n >= 1");
    const int n = params.n;
    const Rational &a = params.a, &c = params.c;
    const CharlierBasis basis(a, n);
    auto cc = connection_coeffs(params, basis);

    const Rational w = params.lambda * delta_q_at_c(params, basis) / basis.norm_sq(n - 1);
    const Rational A11 = -w * basis.C(n - 1).delta().eval(c);
    const Rational A10 = -w * basis.C(n - 1).eval(c);
    const Rational B11 = w * basis.C(n).delta().eval(c);
    const Rational B10 = w * basis.C(n).eval(c);

    const Poly xc = Poly::x_minus(c);
    const Poly ring = xc * Poly::x_minus(c + 1);
    const Poly assembled = ring * basis.C(n) + (xc * A11 + Poly(A10)) * basis.C(n) +
                           (xc * B11 + Poly(B10)) * basis.C(n - 1);
    return {cc.A1, cc.B1, assembled.exact_div(ring)};
}

Prop2Coeffs prop2_coeffs(const Params& params) {
    require_algebra_ok(params);
    if (params.n < 1) throw IndexTooSmall("Prop2 coefficients require n >= 1");
    const int n = params.n;
    const Rational& a = params.a;
    const CharlierBasis basis(a, n);
    const Rational bn = (Rational(1) + params.lambda * k11(n, basis, params.c)) /
                        (Rational(1) + params.lambda * k11(n - 1, basis, params.c));
    const Rational t = bn - 1;
    Prop2Coeffs out{Rational(0), Rational(0), Rational(0), Rational(0)};
    if (t == 0) return out;
    // The factor (n-1) annihilates the undefined a_{-1} when n = 1.
    if (n > 1) out.A11 = -a * Rational(n - 1) * t / a_ratio(n - 2, basis, params.c);
    out.A10 = -a * t;
    out.B11 = a * Rational(n) * t;
    out.B10 = a * a_ratio(n - 1, basis, params.c) * t;
    return out;
}

Prop2Coeffs prop2_coeffs_direct(const Params& params) {
    require_algebra_ok(params);
    if (params.n < 1) throw IndexTooSmall("Prop2 coefficients require n >= 1");
    const int n = params.n;
    const CharlierBasis basis(params.a, n);
    const Rational w = params.lambda * delta_q_at_c(params, basis) / basis.norm_sq(n - 1);
    Prop2Coeffs out;
    out.A11 = -w * basis.C(n - 1).delta().eval(params.c);
    out.A10 = -w * basis.C(n - 1).eval(params.c);
    out.B11 = w * basis.C(n).delta().eval(params.c);
    out.B10 = w * basis.C(n).eval(params.c);
    return out;
}

SigmaCoeffs five_charlier_expansion(const Params& params) {
    const auto p2 = prop2_coeffs_direct(params);
    const int n = params.n;
    const Rational &a = params.a, &c = params.c;

    const Rational nac = Rational(n) + a - c;
    SigmaCoeffs s;
    s.s1 = 2 * nac + p2.A11;
    s.s0 = a * a + (c - n) * (Rational(n) - 2 * a + c + 1) + nac * (2 * Rational(n) + p2.A11) +
           p2.A10 + p2.B11;
    s.sm1 = p2.A11 * Rational(n) * a + (nac - 1) * (2 * a * Rational(n) + p2.B11) + p2.B10;
    s.sm2 = a * Rational(n - 1) * (Rational(n) * a + p2.B11);
    return s;
}

SigmaCoeffs five_charlier_expansion_explicit(const Params& params) {
    require_algebra_ok(params);
    if (params.n < 1) throw IndexTooSmall("five-Charlier expansion requires n >= 1");
    const int n = params.n;
    const Rational &a = params.a, &c = params.c;
    const CharlierBasis basis(a, n);
    const Rational bn = (Rational(1) + params.lambda * k11(n, basis, params.c)) /
                        (Rational(1) + params.lambda * k11(n - 1, basis, params.c));
    const Rational t = bn - 1;
    // Products carrying (n-1)/a_{n-2} vanish with the n-1 factor at n = 1.
    const Rational slope =
        (n > 1 && t != 0) ? a * Rational(n - 1) * t / a_ratio(n - 2, basis, c) : Rational(0);
    const Rational anm1 = (t != 0) ? a_ratio(n - 1, basis, c) : Rational(0);

    const Rational nac = Rational(n) + a - c;
    SigmaCoeffs s;
    s.s1 = 2 * nac - slope;
    s.s0 = a * a + (c - n) * (Rational(n) - 2 * a + c + 1) + a * Rational(n - 1) * t +
           nac * (2 * Rational(n) - slope);
    s.sm1 = a * Rational(n) * (nac - 1) * (bn + 1) + a * t * anm1 - Rational(n) * a * slope;
    s.sm2 = a * a * Rational(n) * Rational(n - 1) * bn;
    return s;
}

Rational hypergeometric_eval(const Params& params, const Rational& x0, bool strict_3f1) {
    require_algebra_ok(params);
    if (params.n < 1) throw IndexTooSmall("hypergeometric representation requires n >= 1");
    const int n = params.n;
    const Rational& a = params.a;
    const CharlierBasis basis(a, n);
    const auto cc = connection_coeffs(params, basis);
    const Rational A1v = cc.A1.eval(x0);
    const Rational B1v = cc.B1.eval(x0);
    const Rational z = Rational(-1) / a;

    if (!strict_3f1) {
        // (-a)^n sum_k [A1 - (n-k) B1 / (a n)] (-n)_k (-x)_k (-1/a)^k / k!
        Rational sum(0);
        Rational t(1);
        for (int k = 0;; ++k) {
            sum += (A1v - Rational(n - k) * B1v / (a * Rational(n))) * t;
            if (k >= n) break;
            t *= (Rational(-n) + k) * (-x0 + k) * z / Rational(k + 1);
        }
        return rational_pow(-a, n) * sum;
    }

    if (B1v == 0)
        throw PoleAtEvaluation("strict 3F1 form undefined: B1(x) = 0 at x = " +
                               rational_to_string(x0));
    const Rational phi = Rational(n) * (Rational(1) - a * A1v / B1v);
    Rational sum(0);
    Rational t(1); // (-n)_k (-x)_k (1-phi)_k / ((-phi)_k k!) (-1/a)^k
    for (int k = 0;; ++k) {
        sum += t;
        if (k >= n) break;
        const Rational lower = -phi + k;
        if (lower == 0)
            throw PoleAtEvaluation("3F1 lower parameter pole: (-phi)_k vanishes at k = " +
                                   std::to_string(k + 1));
        t *= (Rational(-n) + k) * (-x0 + k) * (Rational(1) - phi + k) /
             (lower * Rational(k + 1)) * z;
    }
    return rational_pow(-a, n - 1) * (B1v - a * A1v) * sum;
}

Rational q_norm(const Params& params) {
    require_algebra_ok(params);
    const CharlierBasis basis(params.a, params.n);
    const Rational bn = (Rational(1) + params.lambda * k11(params.n, basis, params.c)) /
                        (Rational(1) + params.lambda * k11(params.n - 1, basis, params.c));
    return charlier_norm(params.n, params.a) * bn;
}

} // namespace sck
