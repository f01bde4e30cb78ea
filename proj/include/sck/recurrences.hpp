#pragma once

#include <array>

#include "sck/ladder.hpp"

namespace sck {

/// Five-term identity coefficients of
/// (x-c)(x-c-1) Q_n = Q_{n+2} + rho[0] Q_{n+1} + rho[1] Q_n + rho[2] Q_{n-1} + rho[3] Q_{n-2}.
struct FiveTermCoeffs {
    Params params;
    std::array<Rational, 4> rho; // rho_{n,n+1}, rho_{n,n}, rho_{n,n-1}, rho_{n,n-2}
    bool verified = false;       // exact polynomial identity re-checked
};

/// Requires n >= 2 (the closed forms reference Q_{n-2} and a_{n-2}).
FiveTermCoeffs five_term_coeffs(const Params& params);

/// Independent oracle: the same coefficients by exact Fourier projection
/// <(x-c)(x-c-1) Q_n, Q_k>_lambda / ||Q_k||_lambda^2 for k = n+1 .. n-2.
std::array<Rational, 4> five_term_fourier(const Params& params);

/// Fourier coefficient for an arbitrary k (0 for k <= n-3).
Rational five_term_projection(const Params& params, int k);

/// Rational-coefficient three term recurrence
/// Q_{n+1} = beta_t Q_n + gamma_t Q_{n-1}, by the ladder-determinant route
/// and by the explicit closed-form displays; both must agree.
struct TTRRCoeffs {
    Params params;
    RatFunc beta_t;
    RatFunc gamma_t;
    RatFunc beta_explicit;
    RatFunc gamma_explicit;
    bool routes_agree = false;
    bool verified = false; // recurrence re-checked exactly
};

TTRRCoeffs ttrr_coeffs(const Params& params);

} // namespace sck
