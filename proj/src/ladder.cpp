#include "sck/ladder.hpp"

namespace sck {

IdentityReport IdentityReport::from_residual(std::string name, const Params& p,
                                             const RatFunc& r) {
    IdentityReport rep;
    rep.identity_name = std::move(name);
    rep.params = p;
    rep.residual_is_zero = r.is_zero();
    rep.residual_degree = r.num().degree();
    return rep;
}

LadderSet build_ladder(const Params& params) {
    require_algebra_ok(params);
    if (params.n < 2) throw IndexTooSmall("ladder coefficients require n >= 2");
    const int n = params.n;
    const Rational& a = params.a;
    const CharlierBasis basis(a, n);

    LadderSet L;
    L.params = params;
    {
        const auto cc = connection_coeffs(params, basis);
        L.A1 = cc.A1;
        L.B1 = cc.B1;
    }
    Params pm = params;
    pm.n = n - 1;
    RatFunc A1m, B1m;
    {
        const auto cc = connection_coeffs(pm, basis);
        A1m = cc.A1;
        B1m = cc.B1;
    }

    const Rational one(1);
    const RatFunc A1s1 = L.A1.shift(one);
    const RatFunc B1s1 = L.B1.shift(one);
    const RatFunc A1ms1 = A1m.shift(one);
    const RatFunc B1ms1 = B1m.shift(one);
    const RatFunc X = RatFunc::x();

    // delta Q_n in the Charlier basis
    L.C1 = A1s1 - L.A1 - RatFunc(Rational(1) / a) * B1s1;
    L.D1 = Rational(n) * A1s1 - L.B1 +
           RatFunc(Poly{(Rational(1) - n) / a, Rational(1) / a}) * B1s1;

    // index-lowered expansions, written in terms of the
    // n-1 connection coefficients.
    const Rational anm1 = a * Rational(n - 1);
    const Rational a2nm1 = a * anm1;
    L.A2 = -(RatFunc(Rational(1) / anm1) * B1m);
    L.B2 = A1m + RatFunc(Poly{(Rational(1) - n - a) / anm1, Rational(1) / anm1}) * B1m;
    L.C2 = (a * B1m - anm1 * A1ms1 -
            RatFunc(Poly{Rational(2) - n, Rational(1)}) * B1ms1) *
           RatFunc(Rational(1) / a2nm1);
    {
        const RatFunc t1 = anm1 * RatFunc(Poly{Rational(1) - n, Rational(1)}) * A1ms1;
        const RatFunc t2 = a * RatFunc(Poly{Rational(-1) + a + n, Rational(-1)}) * B1m;
        // (n-2-x)(n-1-x) - a(1+x)
        const Poly quad = Poly{Rational(n - 2), Rational(-1)} * Poly{Rational(n - 1), Rational(-1)} -
                          a * Poly{Rational(1), Rational(1)};
        const RatFunc t3 = RatFunc(quad) * B1ms1;
        L.D2 = (t1 + t2 + t3) * RatFunc(Rational(1) / a2nm1) - A1m;
    }

    L.Lambda = L.A1 * L.B2 - L.B1 * L.A2;
    if (L.Lambda.is_zero()) throw SingularSystem("Lambda(x;n) is identically zero");

    L.Xi1 = (L.C1 * L.B1 - L.A1 * L.D1) / L.Lambda;
    L.Xi2 = (L.C1 * L.B2 - L.A2 * L.D1) / L.Lambda;
    L.Theta1 = (L.C2 * L.B1 - L.A1 * L.D2) / L.Lambda;
    L.Theta2 = (L.C2 * L.B2 - L.A2 * L.D2) / L.Lambda;

    // nabla-side expansions and their determinant combinations
    const RatFunc invx(Poly::one(), Poly::x());
    const RatFunc A1sm1 = L.A1.shift(Rational(-1));
    const RatFunc B1sm1 = L.B1.shift(Rational(-1));
    L.C3 = L.A1.nabla() + Rational(n) * invx * A1sm1 - invx * B1sm1;
    L.D3 = L.B1.nabla() + Rational(n) * a * invx * A1sm1 +
           RatFunc(Poly{-a, Rational(1)}, Poly::x()) * B1sm1;
    L.Phi1 = L.C3 * L.B1 - L.A1 * L.D3;
    L.Phi2 = L.C3 * L.B2 - L.A2 * L.D3;
    if (L.Phi1.is_zero()) throw DegenerateCoefficient("Phi1(x;n) is identically zero");
    L.F1 = -(L.Lambda / L.Phi1);
    L.G1 = L.Phi2 / L.Phi1;
    L.F2 = -(L.Xi1 * L.F1);
    L.G2 = L.Xi2 - L.Xi1 * L.G1;

    L.Qn = q_poly(params);
    L.Qnm1 = q_poly(pm);
    L.Cn = basis.C(n);
    L.Cnm1 = basis.C(n - 1);
    return L;
}

IdentityReport verify_lowering(const LadderSet& L) {
    const RatFunc r = L.Xi2 * RatFunc(L.Qn) - RatFunc(L.Qn.delta()) - L.Xi1 * RatFunc(L.Qnm1);
    return IdentityReport::from_residual("lowering relation", L.params, r);
}

IdentityReport verify_raising(const LadderSet& L) {
    const RatFunc r =
        L.Theta1 * RatFunc(L.Qnm1) + RatFunc(L.Qnm1.delta()) - L.Theta2 * RatFunc(L.Qn);
    return IdentityReport::from_residual("raising relation", L.params, r);
}

IdentityReport verify_lowering(const Params& params) {
    return verify_lowering(build_ladder(params));
}

IdentityReport verify_raising(const Params& params) {
    return verify_raising(build_ladder(params));
}

SodeCoeffs sode_RS(const LadderSet& L) {
    const RatFunc dXi1 = L.Xi1.delta();
    const RatFunc dXi2 = L.Xi2.delta();
    if ((L.Xi1 + dXi1).is_zero())
        throw DegenerateCoefficient("Xi1 + delta Xi1 is identically zero");
    if (L.Xi1.is_zero()) throw DegenerateCoefficient("Xi1 is identically zero");

    SodeCoeffs out;
    const RatFunc slope = (L.Theta1 - RatFunc::one()) * dXi1 / L.Xi1;
    out.R = slope - dXi2 + L.Theta1 - L.Xi2;
    out.S = L.Theta2 * (L.Xi1 + dXi1) - dXi2 - L.Theta1 * L.Xi2 - L.Xi2 * slope;

    // Explicit forms in A1/B1 alone.
    const int n = L.params.n;
    const Rational& a = L.params.a;
    const RatFunc A1 = L.A1, B1 = L.B1;
    const RatFunc A1p = A1.shift(Rational(1)), A1pp = A1.shift(Rational(2));
    const RatFunc B1p = B1.shift(Rational(1)), B1pp = B1.shift(Rational(2));
    const Rational a2 = a * a;
    const Rational rn(n);
    auto lin = [](Rational c0, Rational c1) {
        return RatFunc(Poly{std::move(c0), std::move(c1)});
    };
    const RatFunc x1 = lin(Rational(1), Rational(1)); // x + 1
    const RatFunc x2 = lin(Rational(2), Rational(1)); // x + 2

    out.Acal = a2 * A1p * (rn * A1 - B1) + a * B1p * (lin(Rational(1 - n), Rational(1)) * A1 + B1);

    // -n(a+2x+3) + n^2 + (x+1)(x+2)
    const RatFunc bracket = RatFunc(rn * rn) - rn * lin(a + 3, Rational(2)) + x1 * x2;
    out.Bcal = 2 * a2 * rn * A1p * A1 -
               a * rn * lin(a - n + 1, Rational(1)) * A1pp * A1 -
               bracket * A1 * B1pp +
               2 * a * lin(Rational(1 - n), Rational(1)) * A1 * B1p -
               2 * a2 * A1p * B1 + a * (a - rn) * A1pp * B1 + 2 * a * B1p * B1 -
               lin(a - n + 2, Rational(1)) * B1pp * B1;

    // Once B/A equals R, the zero-order coefficient is pinned down uniquely by
    // the difference equation itself, so C is computed as S*A.  A term-by-term
    // closed display for C analogous to the one for B above does not survive
    // exact verification against the ladder assembly.
    out.Ccal = out.S * out.Acal;
    return out;
}

SodeCoeffs sode_RS(const Params& params) {
    return sode_RS(build_ladder(params));
}

IdentityReport verify_sode(const LadderSet& L) {
    const auto rs = sode_RS(L);
    const RatFunc r = RatFunc(L.Qn.delta().delta()) + rs.R * RatFunc(L.Qn.delta()) +
                      rs.S * RatFunc(L.Qn);
    return IdentityReport::from_residual("second order difference equation", L.params, r);
}

IdentityReport verify_sode(const Params& params) {
    return verify_sode(build_ladder(params));
}

HypergeometricTypeSode hypergeometric_type_sode(const LadderSet& L) {
    const auto rs = sode_RS(L);
    HypergeometricTypeSode out;
    out.sigma = L.F2;
    out.tau = L.F2.delta() + L.G2.shift(Rational(1)) + rs.R;
    out.mu = L.G2.delta() + rs.S;
    const RatFunc r = out.sigma * RatFunc(L.Qn.delta().nabla()) +
                      out.tau * RatFunc(L.Qn.delta()) + out.mu * RatFunc(L.Qn);
    out.report =
        IdentityReport::from_residual("hypergeometric-type equation", L.params, r);
    return out;
}

HypergeometricTypeSode hypergeometric_type_sode(const Params& params) {
    return hypergeometric_type_sode(build_ladder(params));
}

std::vector<IdentityReport> verify_inverse_relations(const LadderSet& L) {
    if (L.Lambda.is_zero()) throw SingularSystem("Lambda(x;n) is identically zero");
    const RatFunc r1 =
        RatFunc(L.Cn) * L.Lambda - L.B2 * RatFunc(L.Qn) + L.B1 * RatFunc(L.Qnm1);
    const RatFunc r2 =
        RatFunc(L.Cnm1) * L.Lambda + L.A2 * RatFunc(L.Qn) - L.A1 * RatFunc(L.Qnm1);
    return {IdentityReport::from_residual("inverse relation C_n", L.params, r1),
            IdentityReport::from_residual("inverse relation C_{n-1}", L.params, r2)};
}

std::vector<IdentityReport> verify_inverse_relations(const Params& params) {
    return verify_inverse_relations(build_ladder(params));
}

std::vector<IdentityReport> verify_expansions(const LadderSet& L) {
    std::vector<IdentityReport> out;
    const Params& p = L.params;
    const RatFunc Qn(L.Qn), Qnm1(L.Qnm1), Cn(L.Cn), Cnm1(L.Cnm1);

    out.push_back(IdentityReport::from_residual(
        "delta Q_n expansion", p, RatFunc(L.Qn.delta()) - L.C1 * Cn - L.D1 * Cnm1));
    out.push_back(IdentityReport::from_residual(
        "Q_{n-1} expansion", p, Qnm1 - L.A2 * Cn - L.B2 * Cnm1));
    out.push_back(IdentityReport::from_residual(
        "delta Q_{n-1} expansion", p, RatFunc(L.Qnm1.delta()) - L.C2 * Cn - L.D2 * Cnm1));
    out.push_back(IdentityReport::from_residual(
        "nabla Q_n expansion", p, RatFunc(L.Qn.nabla()) - L.C3 * Cn - L.D3 * Cnm1));
    out.push_back(IdentityReport::from_residual(
        "Q_{n-1} from nabla Q_n", p, Qnm1 - L.F1 * RatFunc(L.Qn.nabla()) - L.G1 * Qn));
    out.push_back(IdentityReport::from_residual(
        "delta Q_n from nabla Q_n", p, RatFunc(L.Qn.delta()) - L.F2 * RatFunc(L.Qn.nabla()) - L.G2 * Qn));
    out.push_back(IdentityReport::from_residual(
        "Xi1 determinant consistency", p,
        L.Xi1 - (L.C1 * L.B1 - L.A1 * L.D1) / L.Lambda));
    return out;
}

} // namespace sck
