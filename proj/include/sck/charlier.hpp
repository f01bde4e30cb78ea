#pragma once

#include <vector>

#include "sck/poly.hpp"

namespace sck {

/// Monic Charlier polynomials C_n^{(a)} and their exact Poisson-measure
/// inner product. Everything here is cached once per (a, N).
class CharlierBasis {
  public:
    CharlierBasis(Rational a, int max_n);

    const Rational& a() const { return a_; }
    int max_n() const { return static_cast<int>(polys_.size()) - 1; }

    /// C_n; negative indices give the zero polynomial (recurrence seed).
    const Poly& C(int n) const;
    /// ||C_n||^2 = n! a^n; n < 0 is rejected.
    const Rational& norm_sq(int n) const;

  private:
    Rational a_;
    std::vector<Poly> polys_;
    std::vector<Rational> norms_;
    Poly zero_;
};

/// Builds C_n via the three term recurrence C_{n+1} = (x-n-a)C_n - na C_{n-1}.
Poly charlier_poly(int n, const Rational& a);

Rational charlier_norm(int n, const Rational& a);

/// Stirling numbers of the second kind S(k, j) for k, j <= max_k.
std::vector<std::vector<Integer>> stirling2_triangle(int max_k);

/// k-th moment of the Poisson distribution with parameter a, computed
/// exactly as the Touchard value sum_j S(k,j) a^j.
Rational poisson_moment(int k, const Rational& a);

/// Exact integral of p q against the Poisson measure.
Rational classical_inner(const Poly& p, const Poly& q, const Rational& a);

/// Terminating 2F0 evaluation of C_n^{(a)}(x) = (-a)^n 2F0(-n,-x;;-1/a).
Rational charlier_hyper_eval(int n, const Rational& a, const Rational& x);

} // namespace sck
