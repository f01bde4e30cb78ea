#include "sck/recurrences.hpp"

namespace sck {

namespace {

Poly annulus(const Rational& c) {
    return Poly::x_minus(c) * Poly::x_minus(c + 1);
}

} // namespace

FiveTermCoeffs five_term_coeffs(const Params& params) {
    require_algebra_ok(params);
    if (params.n < 2) throw IndexTooSmall("five term recurrence requires n >= 2");
    const int n = params.n;
    const Rational &a = params.a, &c = params.c;

    auto at = [&](int k) {
        Params p = params;
        p.n = k;
        return p;
    };

    const SigmaCoeffs sig_n = five_charlier_expansion(params);
    const SigmaCoeffs sig_np1 = five_charlier_expansion(at(n + 1));

    // gamma_{n-1}/a_{n-2} (b_n - 1) = -A11(n;c); the direct A11 avoids the
    // a_{n-2} division entirely.
    const Rational hook = -prop2_coeffs_direct(params).A11;

    const Rational cn = charlier_norm(n, a);
    const Rational cnm1 = charlier_norm(n - 1, a);
    const Rational cnm2 = charlier_norm(n - 2, a);
    const Rational qn = q_norm(params);
    const Rational qnp1 = q_norm(at(n + 1));
    const Rational qnm1 = q_norm(at(n - 1));
    const Rational qnm2 = q_norm(at(n - 2));

    const Rational bn = qn / cn;
    const Rational gamma_n = Rational(n) * a;

    FiveTermCoeffs out;
    out.params = params;
    out.rho[0] = sig_np1.sm1 * cn / qnp1 - hook;
    out.rho[1] = sig_n.s0 * cn / qn -
                 hook * (sig_n.sm1 * cnm1 / qn - (Rational(n) + a - c - 2)) -
                 (bn - 1) * (a - gamma_n);
    // The hook constant here belongs to index n-1 (it arises from expanding
    // (x-c)(x-c-1)Q_{n-1}), as the Fourier-projection oracle confirms.
    const Rational hook_m1 = -prop2_coeffs_direct(at(n - 1)).A11;
    out.rho[2] = sig_n.sm1 * cnm1 / qnm1 - hook_m1 * qn / qnm1;
    out.rho[3] = sig_n.sm2 * cnm2 / qnm2;

    // Exact verification of the recurrence itself.
    const Poly lhs = annulus(c) * q_poly(params);
    const Poly rhs = q_poly(at(n + 2)) + q_poly(at(n + 1)) * out.rho[0] +
                     q_poly(params) * out.rho[1] + q_poly(at(n - 1)) * out.rho[2] +
                     q_poly(at(n - 2)) * out.rho[3];
    out.verified = (lhs == rhs);
    return out;
}

Rational five_term_projection(const Params& params, int k) {
    require_algebra_ok(params);
    if (k < 0) throw InvalidParameter("projection index must be nonnegative");
    Params pk = params;
    pk.n = k;
    const Poly shifted = annulus(params.c) * q_poly(params);
    return sobolev_inner(shifted, q_poly(pk), params) / q_norm(pk);
}

std::array<Rational, 4> five_term_fourier(const Params& params) {
    if (params.n < 2) throw IndexTooSmall("five term recurrence requires n >= 2");
    return {five_term_projection(params, params.n + 1), five_term_projection(params, params.n),
            five_term_projection(params, params.n - 1),
            five_term_projection(params, params.n - 2)};
}

TTRRCoeffs ttrr_coeffs(const Params& params) {
    require_algebra_ok(params);
    if (params.n < 2) throw IndexTooSmall("rational TTRR requires n >= 2");
    const int n = params.n;
    const Rational& a = params.a;

    const LadderSet Ln = build_ladder(params);
    Params pnp1 = params;
    pnp1.n = n + 1;
    const LadderSet Lnp1 = build_ladder(pnp1);

    if (Lnp1.Theta2.is_zero())
        throw DegenerateCoefficient("Theta2(x;n+1) is identically zero");

    TTRRCoeffs out;
    out.params = params;
    out.beta_t = (Ln.Xi2 + Lnp1.Theta1) / Lnp1.Theta2;
    out.gamma_t = -(Ln.Xi1 / Lnp1.Theta2);

    // Explicit closed-form displays in terms of A1/B1 at n-1, n, n+1.
    const CharlierBasis basis(a, n + 1);
    Params pnm1 = params;
    pnm1.n = n - 1;
    const auto ccm = connection_coeffs(pnm1, basis);
    const auto cc0 = connection_coeffs(params, basis);
    const auto ccp = connection_coeffs(pnp1, basis);
    const RatFunc &A1m = ccm.A1, &B1m = ccm.B1;
    const RatFunc &A1 = cc0.A1, &B1 = cc0.B1;
    const RatFunc &A1p = ccp.A1, &B1p = ccp.B1;

    auto lin = [](Rational c0, Rational c1) {
        return RatFunc(Poly{std::move(c0), std::move(c1)});
    };
    const Rational anm1 = a * Rational(n - 1);

    const RatFunc denom = B1m * (lin(Rational(1 - n) - a, Rational(1)) * A1 + B1) +
                          anm1 * A1m * A1;
    if (denom.is_zero()) throw DegenerateCoefficient("TTRR explicit denominator vanishes");

    // a^2 + a(n-2x-1) + (n-x)^2 - n + x
    const RatFunc quad =
        RatFunc(Poly{a * a + a * Rational(n - 1) + Rational(n) * Rational(n) - n,
                     Rational(-2) * a - Rational(2) * n + 1, Rational(1)});
    const RatFunc beta_num =
        anm1 * A1m * (lin(-a - n, Rational(1)) * A1p + B1p) +
        B1m * (quad * A1p - lin(a + Rational(n - 1), Rational(-1)) * B1p);
    const RatFunc gamma_num =
        anm1 * (A1p * (lin(a + n, Rational(-1)) * B1 - a * Rational(n) * A1) - B1 * B1p);

    out.beta_explicit = beta_num / denom;
    out.gamma_explicit = gamma_num / denom;
    out.routes_agree =
        (out.beta_t == out.beta_explicit) && (out.gamma_t == out.gamma_explicit);

    // Exact recurrence check after clearing denominators.
    const RatFunc resid = RatFunc(q_poly(pnp1)) - out.beta_t * RatFunc(q_poly(params)) -
                          out.gamma_t * RatFunc(q_poly(pnm1));
    out.verified = resid.is_zero();
    return out;
}

} // namespace sck
