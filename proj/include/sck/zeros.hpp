#pragma once

#include <complex>
#include <vector>

#include "sck/poly.hpp"
#include "sck/rational.hpp"

namespace sck {

// Working precision (bits) for root finding / polishing.  Reads the
// SCK_PRECISION_BITS environment variable once; defaults to 128.
unsigned precision_bits();

struct RootSet {
    std::vector<std::complex<double>> roots;  // sorted by (re, im)
    std::vector<double> residuals;            // |p(r)| / (|lc| * max(1,|r|)^deg)
    int poly_degree = 0;
};

// All roots of p via Aberth-Ehrlich simultaneous iteration in extended
// precision.  Real roots are snapped to the real axis when the imaginary
// part is negligible; complex roots come out in conjugate pairs.
RootSet find_roots(const Poly& p, double tol = 1e-30);

// Real roots only; throws ConvergenceFailure if any root has a
// non-negligible imaginary part.
std::vector<double> real_roots(const Poly& p);

// Limit polynomial G_n = C_n - [DC_n(c) / K_{n-1}^{(1,1)}(c,c)] K_{n-1}^{(0,1)}(x,c),
// the lambda -> infinity limit of Q_n.  Exact rational coefficients.
// Requires n >= 2 (the n = 1 kernel value vanishes).
Poly limit_poly(int n, const Rational& a, const Rational& c);

struct InterlaceReport {
    bool ok = false;
    int first_violation = -1;  // index into the merged chain, -1 if ok
};

// Strict alternation of two increasing real sequences.
//   sizes equal:      inner[0] < outer[0] < inner[1] < outer[1] < ...
//   outer one longer: outer[0] < inner[0] < outer[1] < ... < outer[n]
// Strictness slack is 1e-12 relative to the local gap.
InterlaceReport interlace_check(const std::vector<double>& inner,
                                const std::vector<double>& outer);

// Threshold lambda_0 at which the smallest zero of Q_n crosses the origin:
//   1/lambda_0 = DC_n(c)/C_n(0) * K_{n-1}^{(0,1)}(0,c) - K_{n-1}^{(1,1)}(c,c).
// Exact.  Throws DivisionByZero / NonPositiveLambda0 as applicable.
Rational lambda0(int n, const Rational& a, const Rational& c);

struct SweepRow {
    Rational lambda;
    std::vector<std::complex<double>> eta;
    std::vector<double> residuals;
    bool eta_min_negative = false;
};

std::vector<SweepRow> sweep(int n, const Rational& a, const Rational& c,
                            const std::vector<Rational>& lambdas);

struct SpeedReport {
    std::vector<double> y;           // real zeros of the limit polynomial
    std::vector<double> limit;       // -C_n(y_k) / G_n'(y_k)
    // rel_err[i][k] = | lambda_i*(eta_k - y_k) - limit_k | / |limit_k|
    std::vector<std::vector<double>> rel_err;
};

// Checks the convergence rate lambda*(eta_k(lambda) - y_k) -> -C_n(y_k)/G_n'(y_k)
// along an increasing lambda grid.  Differences are formed in extended
// precision before rounding to double.
SpeedReport speed_check(int n, const Rational& a, const Rational& c,
                        const std::vector<Rational>& lambda_grid);

}  // namespace sck
