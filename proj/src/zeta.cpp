#include "zetalab/zeta.hpp"

#include <algorithm>
#include <cmath>

#include "zetalab/rs_coeffs.hpp"

namespace zetalab {
namespace {

// ---------------------------------------------------------------------------
// Double-double helpers for phase reduction.  Phases like t*log(n) reach
// ~1e7 before reduction mod 2*pi; plain doubles would lose ~9 digits.

struct dd {
    double hi = 0, lo = 0;
};

dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

dd dd_add(dd a, dd b) {
    dd s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    dd r = two_sum(s.hi, s.lo);
    return r;
}

dd dd_mul_d(dd a, double b) {
    double p = a.hi * b;
    double e = std::fma(a.hi, b, -p);
    e += a.lo * b;
    dd r = two_sum(p, e);
    return r;
}

dd dd_log_int(long n) {
    using namespace detail;
    if (n >= 2 && n <= kLogTableMax) return {kLogHi[n], kLogLo[n]};
    return {std::log(static_cast<double>(n)), 0.0};
}

// Reduce a double-double phase modulo 2*pi into (-pi, pi].
double dd_mod_2pi(dd x) {
    using namespace detail;
    double q = std::round(x.hi / kTwoPiHi);
    dd r = dd_add(x, dd_mul_d({kTwoPiHi, kTwoPiLo}, -q));
    double v = r.hi + r.lo;
    if (v > kPi) v -= kTwoPi;
    if (v < -kPi) v += kTwoPi;
    return v;
}

// theta(t) as a double-double, via the asymptotic expansion.  Good to
// ~1e-11 absolute (mod 2*pi) for t >= 10.
dd theta_dd(double t) {
    using namespace detail;
    // (t/2) * (log t - log 2pi) - t/2 - pi/8 + corrections
    dd logt = {std::log(t), 0.0};
    // one refinement step: log t += t*exp(-log t) - 1
    logt.lo = t * std::exp(-logt.hi) - 1.0;
    dd lg = dd_add(logt, {-kLog2PiHi, -kLog2PiLo});
    dd th = dd_mul_d(lg, 0.5 * t);
    th = dd_add(th, dd_mul_d({t, 0.0}, -0.5));
    th = dd_add(th, {-kPi / 8.0, 0.0});
    double t2 = t * t;
    double corr = 1.0 / (48.0 * t) + 7.0 / (5760.0 * t * t2) + 31.0 / (80640.0 * t * t2 * t2) + 127.0 / (430080.0 * t * t2 * t2 * t2);
    th = dd_add(th, {corr, 0.0});
    return th;
}

double cheb_eval(const double* c, int degree, double x) {
    double b1 = 0.0, b2 = 0.0;
    for (int k = degree; k >= 1; --k) {
        double tmp = 2.0 * x * b1 - b2 + c[k];
        b2 = b1;
        b1 = tmp;
    }
    return x * b1 - b2 + c[0];
}

// ---------------------------------------------------------------------------
// Lanczos (g = 7, 9 terms; GSL's coefficient set).

constexpr double kLanczos7[9] = {
    0.99999999999980993227684700473478,
    676.520368121885098567009190444019,
    -1259.13921672240287047156078755283,
    771.3234287776530788486528258894,
    -176.61502916214059906584551354,
    12.507343278686904814458936853,
    -0.13857109526572011689554707,
    9.984369578019570859563e-6,
    1.50563273514931155834e-7,
};

// log(sin(pi z)) without overflow for large |Im z|.
cplx log_sin_pi(cplx z) {
    if (z.imag() < 0) return std::conj(log_sin_pi(std::conj(z)));
    if (z.imag() < 10.0) {
        cplx s = std::sin(kPi * z);
        if (s == cplx(0.0)) throw PoleError("log_sin_pi: sin(pi z) = 0");
        return std::log(s);
    }
    // sin(pi z) = e^{-i pi z} (1 - e^{2 i pi z}) (i / 2)
    const cplx i(0.0, 1.0);
    cplx w = std::exp(2.0 * i * kPi * z);  // |w| = e^{-2 pi Im z}, tiny
    return -i * kPi * z + std::log(1.0 - w) + std::log(0.5 * i);
}

}  // namespace

cplx log_gamma(cplx z) {
    if (z.real() < 0.5) {
        // reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1-z)
        if (std::abs(z.imag()) < 1e-13) {
            double r = std::round(z.real());
            if (r <= 0.0 && std::abs(z.real() - r) < 1e-14) throw PoleError("log_gamma: pole at non-positive integer");
        }
        return std::log(kPi) - log_sin_pi(z) - log_gamma(1.0 - z);
    }
    cplx zm1 = z - 1.0;
    cplx ag = kLanczos7[0];
    for (int k = 1; k <= 8; ++k) ag += kLanczos7[k] / (zm1 + static_cast<double>(k));
    cplx t = zm1 + 7.5;
    return 0.5 * kLog2Pi + (zm1 + 0.5) * std::log(t) - t + std::log(ag);
}

cplx gamma(cplx s) {
    cplx g = std::exp(log_gamma(s));
    return require_finite(g, "gamma");
}

cplx chi(cplx s) {
    auto attempt = [](cplx w) -> cplx {
        cplx lg = w * std::log(2.0) + (w - 1.0) * std::log(kPi) + log_sin_pi(w / 2.0) + log_gamma(1.0 - w);
        return std::exp(lg);
    };
    // sin(pi s/2) zeros and Gamma(1-s) poles cancel at even s >= 2; evaluate
    // through chi(s) chi(1-s) = 1 when the direct product degenerates.
    try {
        cplx v = attempt(s);
        if (is_finite(v) && v != cplx(0.0)) return v;
    } catch (const PoleError&) {
    }
    cplx w = attempt(1.0 - s);
    if (!is_finite(w) || w == cplx(0.0)) throw OverflowError("chi: log-space evaluation degenerate");
    return 1.0 / w;
}

namespace {

constexpr double kBernoulli2k[16] = {
    0.0,  // unused
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
};

// Euler-Maclaurin for Re s > 0, s != 1.
cplx zeta_em(cplx s, const EvalConfig& cfg) {
    double t = std::abs(s.imag());
    long n_terms = std::max<long>(cfg.euler_maclaurin_terms, static_cast<long>(0.45 * t) + 20);
    for (int attempt = 0; attempt < 4; ++attempt) {
        cplx sum = 0.0;
        for (long n = 1; n <= n_terms; ++n) {
            sum += std::polar(std::exp(-s.real() * std::log(static_cast<double>(n))),
                              -s.imag() * std::log(static_cast<double>(n)));
        }
        double dn = static_cast<double>(n_terms);
        cplx npow = std::polar(std::exp(-s.real() * std::log(dn)), -s.imag() * std::log(dn));  // N^{-s}
        cplx tail = npow * dn / (s - 1.0) - 0.5 * npow;
        // Bernoulli corrections: B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{1-s-2k}
        cplx poch = s;                  // s(s+1)...(s+2k-2), start k=1: just s
        cplx scale = npow / dn;         // N^{-s-1}
        double factorial = 2.0;         // (2k)!
        double last = 1e300;
        cplx corr = 0.0;
        bool converged = false;
        for (int k = 1; k <= 15; ++k) {
            cplx term = (kBernoulli2k[k] / factorial) * poch * scale;  // scale = N^{-s-2k+1}
            corr += term;
            double mag = std::abs(term);
            if (mag < 0.25 * cfg.target_abs_tol) {
                converged = true;
                break;
            }
            if (mag > last) break;  // divergence of the asymptotic tail
            last = mag;
            poch *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
            factorial *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
            scale /= dn * dn;
        }
        if (converged) return sum + tail + corr;
        n_terms *= 2;
    }
    throw NoConvergence("zeta: Euler-Maclaurin tail did not converge");
}

}  // namespace

cplx zeta(cplx s, const EvalConfig& cfg) {
    cfg.validate();
    if (std::abs(s - cplx(1.0, 0.0)) < 1e-14) throw PoleError("zeta: pole at s = 1");
    if (s.real() <= 0.0) {
        if (std::abs(s) < 1e-14) return -0.5;
        if (std::abs(s.imag()) < 1e-13) {
            double r = std::round(s.real());
            if (r < 0.0 && std::abs(s.real() - r) < 1e-14 && std::abs(std::remainder(r, 2.0)) < 0.5)
                return 0.0;  // trivial zeros
        }
        return chi(s) * zeta(1.0 - s, cfg);
    }
    return require_finite(zeta_em(s, cfg), "zeta");
}

double rs_theta(double t) {
    dd th = theta_dd(t);
    return th.hi + th.lo;
}

double riemann_siegel_z(double t, int order) {
    using namespace detail;
    if (t < 2.0 * kTwoPi) throw DomainError("riemann_siegel_z: t too small for the main sum");
    double a = std::sqrt(t / kTwoPi);
    long big_n = static_cast<long>(a);
    double p = 1.0 - 2.0 * (a - static_cast<double>(big_n));
    dd th = theta_dd(t);
    double main_sum = 0.0;
    for (long n = 1; n <= big_n; ++n) {
        dd phase = dd_add(th, dd_mul_d(dd_log_int(n), -t));
        main_sum += std::cos(dd_mod_2pi(phase)) / std::sqrt(static_cast<double>(n));
    }
    int jmax = std::min(order, kRsNumCoeffs - 1);
    double corr = 0.0;
    double apow = 1.0;
    for (int j = 0; j <= jmax; ++j) {
        corr += cheb_eval(kRsCheb[j], kRsChebDegree, p) * apow;
        apow /= a;
    }
    double sign = (big_n % 2 == 1) ? 1.0 : -1.0;  // (-1)^{N-1}
    return 2.0 * main_sum + sign * corr / std::sqrt(a);
}

cplx zeta_half_line(double t, const EvalConfig& cfg) {
    cfg.validate();
    if (t < 0.0) throw DomainError("zeta_half_line: t must be >= 0");
    if (t < cfg.crossover_t) return zeta(cplx(0.5, t), cfg);
    double z = riemann_siegel_z(t, cfg.rs_correction_order);
    double th = dd_mod_2pi(theta_dd(t));
    return std::polar(z, -th);
}

double zeta_pow_modulus(double t, int k, const EvalConfig& cfg) {
    if (k < 1 || k > 4) throw BadParams("zeta_pow_modulus: k must be in [1, 4]");
    if (t < 0.0) throw DomainError("zeta_pow_modulus: t must be >= 0");
    double m2 = std::norm(zeta_half_line(t, cfg));
    double r = m2;
    for (int i = 1; i < k; ++i) r *= m2;
    return r;
}

}  // namespace zetalab
