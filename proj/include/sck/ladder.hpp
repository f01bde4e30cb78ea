#pragma once

#include <string>
#include <vector>

#include "sck/sobolev.hpp"

namespace sck {

/// Outcome of one exact identity check: residual after clearing all
/// denominators, which must be the zero polynomial.
struct IdentityReport {
    std::string identity_name;
    Params params;
    bool residual_is_zero = false;
    int residual_degree = -1; // -1 for the zero polynomial

    static IdentityReport from_residual(std::string name, const Params& p, const RatFunc& r);
};

/// All rational-function coefficient families of the ladder machinery,
/// built strictly from A1, B1 and the parameters.
struct LadderSet {
    Params params;
    RatFunc A1, B1;             // connection coefficients at index n
    RatFunc C1, D1;             // delta Q_n in the Charlier basis
    RatFunc A2, B2, C2, D2;     // Q_{n-1}, delta Q_{n-1} in the same basis
    RatFunc Lambda;             // A1 B2 - B1 A2
    RatFunc Xi1, Xi2;           // lowering determinants
    RatFunc Theta1, Theta2;     // raising determinants
    RatFunc C3, D3;             // nabla Q_n = C3 C_n + D3 C_{n-1}
    RatFunc Phi1, Phi2;         // determinants of the nabla-side system
    RatFunc F1, G1, F2, G2;     // Q_{n-1} and delta Q_n from (nabla Q_n, Q_n)
    Poly Qn, Qnm1, Cn, Cnm1;    // cached polynomials for identity checks
};

/// Requires n >= 2 (the index-lowered expansions divide by n-1).
LadderSet build_ladder(const Params& params);

IdentityReport verify_lowering(const Params& params);
IdentityReport verify_raising(const Params& params);
IdentityReport verify_lowering(const LadderSet& L);
IdentityReport verify_raising(const LadderSet& L);

/// Second-order difference equation coefficients, by both routes: the
/// Xi/Theta assembly (R, S)
/// and the explicit A/B/C forms with R = Bcal/Acal, S = Ccal/Acal.
struct SodeCoeffs {
    RatFunc R, S;
    RatFunc Acal, Bcal, Ccal;
};
SodeCoeffs sode_RS(const Params& params);
SodeCoeffs sode_RS(const LadderSet& L);

IdentityReport verify_sode(const Params& params);
IdentityReport verify_sode(const LadderSet& L);

/// Hypergeometric-type form sigma dd'Q + tau dQ + mu Q = 0 with sigma = F2 etc.
struct HypergeometricTypeSode {
    RatFunc sigma, tau, mu;
    IdentityReport report;
};
HypergeometricTypeSode hypergeometric_type_sode(const Params& params);
HypergeometricTypeSode hypergeometric_type_sode(const LadderSet& L);

/// Inverse relations expressing C_n, C_{n-1} through Q_n, Q_{n-1};
/// both residuals must vanish.
std::vector<IdentityReport> verify_inverse_relations(const Params& params);
std::vector<IdentityReport> verify_inverse_relations(const LadderSet& L);

/// All basis-expansion identities plus the determinant consistency of Xi1.
std::vector<IdentityReport> verify_expansions(const LadderSet& L);

} // namespace sck
