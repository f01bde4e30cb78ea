#include "sck/zeros.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include <boost/multiprecision/mpfr.hpp>

#include "sck/charlier.hpp"
#include "sck/errors.hpp"
#include "sck/kernels.hpp"
#include "sck/sobolev.hpp"

namespace sck {

namespace {

using BF = boost::multiprecision::mpfr_float;

struct CF {
    BF re, im;
};

CF operator+(const CF& a, const CF& b) { return {a.re + b.re, a.im + b.im}; }
CF operator-(const CF& a, const CF& b) { return {a.re - b.re, a.im - b.im}; }
CF operator*(const CF& a, const CF& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
CF operator/(const CF& a, const CF& b) {
    BF d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
BF abs2(const CF& a) { return a.re * a.re + a.im * a.im; }
BF cabs(const CF& a) { return sqrt(abs2(a)); }

BF to_bf(const Rational& r) {
    return BF(r.get_num().get_str()) / BF(r.get_den().get_str());
}

std::vector<BF> to_bf_coeffs(const Poly& p) {
    std::vector<BF> c;
    c.reserve(static_cast<size_t>(p.degree()) + 1);
    for (int k = 0; k <= p.degree(); ++k) c.push_back(to_bf(p.coeff(k)));
    return c;
}

CF horner(const std::vector<BF>& c, const CF& z) {
    CF v{c.back(), BF(0)};
    for (int k = static_cast<int>(c.size()) - 2; k >= 0; --k)
        v = v * z + CF{c[static_cast<size_t>(k)], BF(0)};
    return v;
}

std::vector<BF> deriv_coeffs(const std::vector<BF>& c) {
    std::vector<BF> d;
    for (size_t k = 1; k < c.size(); ++k) d.push_back(BF(k) * c[k]);
    return d;
}

// Full-precision root list; the public RootSet is a rounded view of this.
struct MpRoots {
    std::vector<CF> z;
    std::vector<double> residuals;
};

MpRoots aberth(const Poly& p) {
    const int d = p.degree();
    MpRoots out;
    if (d <= 0) return out;

    auto c = to_bf_coeffs(p);
    auto dc = deriv_coeffs(c);

    if (d == 1) {
        out.z.push_back({-c[0] / c[1], BF(0)});
        out.residuals.push_back(0.0);
        return out;
    }

    // Cauchy bound on root moduli.
    BF radius(0);
    for (int k = 0; k < d; ++k) {
        BF q = abs(c[static_cast<size_t>(k)] / c[static_cast<size_t>(d)]);
        if (q > radius) radius = q;
    }
    radius += 1;

    // Initial guesses on a circle; the phase offset breaks the symmetry
    // that would otherwise stall iterates of real polynomials.
    const BF pi = acos(BF(-1));
    std::vector<CF> z(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k) {
        BF theta = 2 * pi * BF(k) / BF(d) + BF("0.35711");
        z[static_cast<size_t>(k)] = {radius / 2 * cos(theta), radius / 2 * sin(theta)};
    }

    const BF eps = pow(BF(2), -static_cast<int>(precision_bits()) + 8);
    const int max_iter = 500;
    bool converged = false;
    for (int iter = 0; iter < max_iter && !converged; ++iter) {
        converged = true;
        for (int k = 0; k < d; ++k) {
            CF& zk = z[static_cast<size_t>(k)];
            CF pv = horner(c, zk);
            CF dv = horner(dc, zk);
            if (dv.re == 0 && dv.im == 0) {
                // nudge off a critical point
                zk.re += eps + BF(1) / BF(1000 + k);
                converged = false;
                continue;
            }
            CF newton = pv / dv;
            CF sum{BF(0), BF(0)};
            for (int j = 0; j < d; ++j) {
                if (j == k) continue;
                CF diff = zk - z[static_cast<size_t>(j)];
                BF d2 = abs2(diff);
                if (d2 == 0) {
                    diff.re += eps + BF(1) / BF(1000 + j);
                    d2 = abs2(diff);
                }
                sum = sum + CF{diff.re / d2, -diff.im / d2};
            }
            CF denom = CF{BF(1), BF(0)} - newton * sum;
            CF w = (denom.re == 0 && denom.im == 0) ? newton : newton / denom;
            zk = zk - w;
            if (cabs(w) > eps * (1 + cabs(zk))) converged = false;
        }
    }
    if (!converged)
        throw ConvergenceFailure("root iteration did not converge for degree " +
                                 std::to_string(d));

    // Snap roots with negligible imaginary part onto the real axis.
    for (auto& zk : z) {
        if (abs(zk.im) <= pow(BF(2), -static_cast<int>(precision_bits()) / 2) *
                              (1 + abs(zk.re)))
            zk.im = 0;
    }
    std::sort(z.begin(), z.end(), [](const CF& a, const CF& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    });

    BF lead = abs(c.back());
    for (const auto& zk : z) {
        BF scale = lead;
        BF m = cabs(zk);
        if (m > 1)
            for (int k = 0; k < d; ++k) scale *= m;
        out.residuals.push_back(static_cast<double>(cabs(horner(c, zk)) / scale));
    }
    out.z = std::move(z);
    return out;
}

void set_precision() {
    // boost mpfr_float tracks precision in decimal digits
    BF::default_precision(
        static_cast<unsigned>(static_cast<double>(precision_bits()) * 0.30103) + 2);
}

std::complex<double> to_cd(const CF& z) {
    return {static_cast<double>(z.re), static_cast<double>(z.im)};
}

}  // namespace

unsigned precision_bits() {
    static unsigned bits = [] {
        const char* env = std::getenv("SCK_PRECISION_BITS");
        if (!env) return 128u;
        long v = std::strtol(env, nullptr, 10);
        if (v < 64) v = 64;
        if (v > 8192) v = 8192;
        return static_cast<unsigned>(v);
    }();
    return bits;
}

RootSet find_roots(const Poly& p, double) {
    if (p.is_zero()) throw InvalidParameter("cannot find roots of the zero polynomial");
    set_precision();
    MpRoots mp = aberth(p);
    RootSet rs;
    rs.poly_degree = p.degree();
    for (const auto& z : mp.z) rs.roots.push_back(to_cd(z));
    rs.residuals = mp.residuals;
    return rs;
}

std::vector<double> real_roots(const Poly& p) {
    RootSet rs = find_roots(p);
    std::vector<double> out;
    for (const auto& z : rs.roots) {
        if (z.imag() != 0.0)
            throw ConvergenceFailure("polynomial has non-real roots");
        out.push_back(z.real());
    }
    std::sort(out.begin(), out.end());
    return out;
}

Poly limit_poly(int n, const Rational& a, const Rational& c) {
    if (n < 2) throw InvalidParameter("limit polynomial needs n >= 2");
    Params params{n, a, c, Rational(1)};
    require_algebra_ok(params);
    CharlierBasis basis(a, n);
    Rational k11v = kernel_at(n - 1, 1, 1, basis, c, c);
    if (k11v == 0) throw DivisionByZero("K_{n-1}^{(1,1)}(c,c) vanishes");
    Rational dcn = basis.C(n).eval(c + 1) - basis.C(n).eval(c);
    return basis.C(n) - (dcn / k11v) * kernel_poly_x(n - 1, 1, basis, c);
}

InterlaceReport interlace_check(const std::vector<double>& inner,
                                const std::vector<double>& outer) {
    InterlaceReport rep;
    std::vector<double> chain;
    if (outer.size() == inner.size()) {
        for (size_t k = 0; k < inner.size(); ++k) {
            chain.push_back(inner[k]);
            chain.push_back(outer[k]);
        }
    } else if (outer.size() == inner.size() + 1) {
        for (size_t k = 0; k < inner.size(); ++k) {
            chain.push_back(outer[k]);
            chain.push_back(inner[k]);
        }
        chain.push_back(outer.back());
    } else {
        throw InvalidParameter("interlace_check: size mismatch");
    }
    for (size_t k = 0; k + 1 < chain.size(); ++k) {
        double scale = std::max({std::abs(chain[k]), std::abs(chain[k + 1]), 1.0});
        if (chain[k + 1] - chain[k] <= 1e-12 * scale) {
            rep.first_violation = static_cast<int>(k);
            return rep;
        }
    }
    rep.ok = true;
    return rep;
}

Rational lambda0(int n, const Rational& a, const Rational& c) {
    if (n < 1) throw InvalidParameter("lambda0 needs n >= 1");
    Params params{n, a, c, Rational(1)};
    ValidityReport v = validate(params);
    if (!v.zeros_ok)
        throw InvalidParameter("zero analysis requires c < -1");
    CharlierBasis basis(a, n);
    Rational cn0 = basis.C(n).eval(Rational(0));
    if (cn0 == 0) throw DivisionByZero("C_n(0) vanishes");
    Rational dcn = basis.C(n).eval(c + 1) - basis.C(n).eval(c);
    Rational inv = dcn / cn0 * kernel_at(n - 1, 0, 1, basis, Rational(0), c) -
                   kernel_at(n - 1, 1, 1, basis, c, c);
    if (inv == 0) throw DivisionByZero("lambda0 denominator vanishes");
    Rational l0 = 1 / inv;
    if (l0 <= 0) throw NonPositiveLambda0("computed threshold is not positive");
    return l0;
}

std::vector<SweepRow> sweep(int n, const Rational& a, const Rational& c,
                            const std::vector<Rational>& lambdas) {
    std::vector<SweepRow> rows;
    rows.reserve(lambdas.size());
    for (const auto& lam : lambdas) {
        Params params{n, a, c, lam};
        RootSet rs = find_roots(q_poly(params));
        SweepRow row;
        row.lambda = lam;
        row.eta = rs.roots;
        row.residuals = rs.residuals;
        for (const auto& z : rs.roots)
            if (z.imag() == 0.0 && z.real() < 0.0) row.eta_min_negative = true;
        rows.push_back(std::move(row));
    }
    return rows;
}

SpeedReport speed_check(int n, const Rational& a, const Rational& c,
                        const std::vector<Rational>& lambda_grid) {
    set_precision();
    SpeedReport rep;
    Poly g = limit_poly(n, a, c);
    MpRoots gy = aberth(g);
    CharlierBasis basis(a, n);
    auto cn = to_bf_coeffs(basis.C(n));
    auto gd = to_bf_coeffs(g.derivative());
    // The pencil whose zeros are tracked is C_n + lambda*K*G_n with
    // K = K_{n-1}^{(1,1)}(c,c), so the interlacing lemma gives the rate
    // -C_n(y_k) / (K * G_n'(y_k)); the bare -C_n/G_n' form misses the K.
    const BF kfac = to_bf(kernel_at(n - 1, 1, 1, basis, c, c));

    std::vector<CF> y;
    for (const auto& z : gy.z) {
        if (z.im != 0) continue;  // rate limit only makes sense for real limits
        y.push_back(z);
        rep.y.push_back(static_cast<double>(z.re));
        BF lim = -horner(cn, z).re / (kfac * horner(gd, z).re);
        rep.limit.push_back(static_cast<double>(lim));
    }

    for (const auto& lam : lambda_grid) {
        Params params{n, a, c, lam};
        MpRoots eta = aberth(q_poly(params));
        BF lam_bf = to_bf(lam);
        std::vector<double> errs;
        for (size_t k = 0; k < y.size(); ++k) {
            // match eta root closest to y_k
            const CF* best = nullptr;
            BF best_d(0);
            for (const auto& e : eta.z) {
                BF dist = abs2(e - y[k]);
                if (!best || dist < best_d) {
                    best = &e;
                    best_d = dist;
                }
            }
            BF lim = -horner(cn, y[k]).re / (kfac * horner(gd, y[k]).re);
            BF scaled = lam_bf * (best->re - y[k].re);
            errs.push_back(static_cast<double>(abs((scaled - lim) / lim)));
        }
        rep.rel_err.push_back(std::move(errs));
    }
    return rep;
}

}  // namespace sck
