#pragma once

#include <optional>

#include "sck/kernels.hpp"

namespace sck {

/// The tuple (n, a, c, lambda) governing every construction.
struct Params {
    int n = 0;
    Rational a = Rational(1);
    Rational c = Rational(-2);
    Rational lambda = Rational(0);
};

struct ValidityReport {
    /// (c, c+1) carries no point of the Poisson spectrum: c is a
    /// nonnegative integer or c <= -1.
    bool algebra_ok = false;
    /// Stricter domain for the zero analysis: c < -1.
    bool zeros_ok = false;
};

ValidityReport validate(const Params& params);
/// Throws InvalidParameter unless algebra_ok (and a > 0, lambda >= 0).
void require_algebra_ok(const Params& params);

/// <p, q>_lambda = classical inner product + lambda Dp(c) Dq(c), exact.
Rational sobolev_inner(const Poly& p, const Poly& q, const Params& params);

struct AnBn {
    std::optional<Rational> a_n; // C_{n+1}(c)/C_n(c), absent when C_n(c) = 0
    Rational b_n;
};
AnBn an_bn(const Params& params);

/// a_{n} = C_{n+1}(c)/C_n(c); throws DivisionByZero naming the index.
Rational a_ratio(int n, const CharlierBasis& basis, const Rational& c);

/// K_{n}^{(1,1)}(c,c), with the empty-sum convention for n = -1.
Rational k11(int n, const CharlierBasis& basis, const Rational& c);

struct SobolevPoly {
    Params params;
    Poly poly;
    Rational norm_sq;
    Rational b_n;
};

/// Production constructor, via the kernel connection formula
/// Q_n = C_n - [lambda DC_n(c) / (1 + lambda K_{n-1}^{(1,1)}(c,c))] K_{n-1}^{(0,1)}(x,c).
SobolevPoly q_poly_kernel(const Params& params);
Poly q_poly(const Params& params); // shorthand for q_poly_kernel(...).poly

/// Rational-function coefficients of the two-term connection formula
/// Q_n = A1 C_n + B1 C_{n-1}.
struct ConnectionCoeffs {
    RatFunc A1;
    RatFunc B1;
};
ConnectionCoeffs connection_coeffs(const Params& params, const CharlierBasis& basis);
ConnectionCoeffs connection_coeffs(const Params& params);

/// Assembles (x-c)(x-c-1) Q_n from the connection formula and recovers Q_n
/// by exact division; must equal q_poly_kernel.
struct ConnectionResult {
    RatFunc A1;
    RatFunc B1;
    Poly Q;
};
ConnectionResult q_poly_connection(const Params& params);

/// Delta Q_n^lambda(c) = DC_n(c) / (1 + lambda K_{n-1}^{(1,1)}(c,c)).
Rational delta_q_at_c(const Params& params, const CharlierBasis& basis);

struct Prop2Coeffs {
    Rational A11, A10, B11, B10;
};
/// Via the a_n, b_n closed forms; the n = 1 product with a_{-1} is
/// defined as 0 since its (n-1) factor vanishes.
Prop2Coeffs prop2_coeffs(const Params& params);
/// Via lambda DQ_n(c)/||C_{n-1}||^2 directly; valid for every n >= 1.
Prop2Coeffs prop2_coeffs_direct(const Params& params);

/// sigma coefficients of the five-Charlier expansion
/// (x-c)(x-c-1) Q_n = C_{n+2} + s1 C_{n+1} + s0 C_n + sm1 C_{n-1} + sm2 C_{n-2}.
struct SigmaCoeffs {
    Rational s1, s0, sm1, sm2;
};
/// Primary route, through the Prop2 A/B coefficients.
SigmaCoeffs five_charlier_expansion(const Params& params);
/// Alternative explicit route in terms of a_n, b_n; must agree.
SigmaCoeffs five_charlier_expansion_explicit(const Params& params);

/// Evaluates Q_n^lambda(x0) via the pole-free pre-normalized terminating
/// sum (-a)^n sum_k [A1 - (n-k) B1/(a n)] (-n)_k (-x)_k (-1/a)^k / k!.
/// strict_3f1 = true requests the literal 3F1 form instead, which throws
/// PoleAtEvaluation when (-phi)_k vanishes or B1(x0) = 0.
Rational hypergeometric_eval(const Params& params, const Rational& x0, bool strict_3f1 = false);

/// ||Q_n||_lambda^2 = n! a^n b_n.
Rational q_norm(const Params& params);

} // namespace sck
