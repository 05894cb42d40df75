#include "zetalab/laplace.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>

#include "zetalab/fit.hpp"

namespace zetalab {

DivisorTable DivisorTable::build(long n_max) {
    if (n_max < 1) throw BadParams("DivisorTable: n_max must be >= 1");
    DivisorTable t;
    t.n_max = n_max;
    t.d.assign(static_cast<size_t>(n_max) + 1, 0);
    t.d4.assign(static_cast<size_t>(n_max) + 1, 0);
    for (long i = 1; i <= n_max; ++i)
        for (long j = i; j <= n_max; j += i) t.d[static_cast<size_t>(j)] += 1;
    // d_4 = d * d (Dirichlet convolution)
    for (long a = 1; a <= n_max; ++a) {
        std::int64_t da = t.d[static_cast<size_t>(a)];
        for (long b = 1; a * b <= n_max; ++b)
            t.d4[static_cast<size_t>(a * b)] += da * t.d[static_cast<size_t>(b)];
    }
    return t;
}

namespace {

void put_i64(std::ofstream& out, std::int64_t v) {
    unsigned char buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>((static_cast<std::uint64_t>(v) >> (8 * i)) & 0xff);
    out.write(reinterpret_cast<const char*>(buf), 8);
}

std::int64_t get_i64(std::ifstream& in) {
    unsigned char buf[8];
    in.read(reinterpret_cast<char*>(buf), 8);
    if (!in) throw CacheCorrupt("divisor cache: truncated");
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
    return static_cast<std::int64_t>(v);
}

}  // namespace

void DivisorTable::save(const std::string& path) const {
    std::filesystem::path target(path);
    if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw CacheCorrupt("divisor cache: cannot open " + tmp.string());
        out.write("DIV1", 4);
        put_i64(out, n_max);
        for (long n = 0; n <= n_max; ++n) put_i64(out, d[static_cast<size_t>(n)]);
        for (long n = 0; n <= n_max; ++n) put_i64(out, d4[static_cast<size_t>(n)]);
        if (!out) throw CacheCorrupt("divisor cache: write failed");
    }
    std::filesystem::rename(tmp, target);
}

DivisorTable DivisorTable::load_or_build(const std::string& cache_path, long n_max) {
    if (std::filesystem::exists(cache_path)) {
        try {
            std::ifstream in(cache_path, std::ios::binary);
            char magic[4];
            in.read(magic, 4);
            if (!in || std::memcmp(magic, "DIV1", 4) != 0)
                throw CacheCorrupt("divisor cache: bad magic");
            DivisorTable t;
            t.n_max = get_i64(in);
            if (t.n_max >= n_max) {
                t.d.resize(static_cast<size_t>(t.n_max) + 1);
                t.d4.resize(static_cast<size_t>(t.n_max) + 1);
                for (long n = 0; n <= t.n_max; ++n) t.d[static_cast<size_t>(n)] = get_i64(in);
                for (long n = 0; n <= t.n_max; ++n) t.d4[static_cast<size_t>(n)] = get_i64(in);
                if (t.d[1] != 1 || t.d4[1] != 1) throw CacheCorrupt("divisor cache: bad content");
                return t;
            }
        } catch (const CacheCorrupt&) {
            // fall through and rebuild
        }
    }
    DivisorTable t = build(n_max);
    t.save(cache_path);
    return t;
}

double zeta_prime_2() {
    // zeta'(2) = -sum log(n)/n^2, Euler-Maclaurin tail at N
    const long n_cut = 20000;
    double sum = 0.0;
    for (long n = n_cut; n >= 2; --n) {
        double dn = static_cast<double>(n);
        sum += std::log(dn) / (dn * dn);
    }
    double dn = static_cast<double>(n_cut);
    double lg = std::log(dn);
    double tail = (lg + 1.0) / dn - 0.5 * lg / (dn * dn) + (2.0 * lg - 1.0) / (12.0 * dn * dn * dn);
    return -(sum + tail);
}

L2AsympConstants L2AsympConstants::pinned() {
    L2AsympConstants c;
    c.a = 1.0 / (2.0 * kPi * kPi);
    double pim2 = 1.0 / (kPi * kPi);
    c.b = pim2 * (2.0 * kLog2Pi - 6.0 * kEulerGamma + 24.0 * zeta_prime_2() * pim2);
    return c;
}

TransformValue laplace_transform(int k, cplx s, double tol, const EvalConfig& cfg) {
    if (k < 1 || k > 3) throw BadParams("laplace_transform: k must be in [1, 3]");
    if (!(s.real() > 0.0)) throw DomainError("laplace_transform: requires Re s > 0");
    if (!(tol > 0.0)) throw BadParams("laplace_transform: tol must be > 0");
    double tau = s.imag();
    auto f = [k, tau, &cfg](double x) -> cplx {
        double m = zeta_pow_modulus(x, k, cfg);
        if (tau == 0.0) return m;
        return m * std::polar(1.0, -tau * x);
    };
    QuadOptions opt;
    opt.freq_hint = [k, tau](double x) {
        return std::abs(tau) + k * std::log(std::max(x, 1.0) / kTwoPi + 2.0);
    };
    QuadResult r = integrate_exp_tail(f, 0.0, s.real(), tol, static_cast<double>(k), opt);
    return {r.value, r.err_est};
}

double kober_main(double sigma_prime) {
    if (!(sigma_prime > 0.0 && sigma_prime < 1.0))
        throw DomainError("kober_main: requires 0 < sigma' < 1");
    return (kEulerGamma - std::log(kTwoPi * sigma_prime)) / (2.0 * std::sin(0.5 * sigma_prime));
}

cplx atkinson_l1(cplx s, long n_max, const DivisorTable& table, double* tail_bound_out) {
    if (!(s.real() > 0.0 && s.real() < kPi))
        throw DomainError("atkinson_l1: requires 0 < Re s < pi");
    if (n_max < 1) throw BadParams("atkinson_l1: n_max must be >= 1");
    if (n_max > table.n_max) throw TableTooSmall("atkinson_l1: divisor table too small");
    const cplx i(0.0, 1.0);
    cplx head = -i * std::exp(0.5 * i * s) * (kLog2Pi - kEulerGamma + (0.5 * kPi - s) * i);
    cplx w = std::exp(-i * s);
    cplx sum = 0.0;
    for (long n = n_max; n >= 1; --n)
        sum += static_cast<double>(table.d[static_cast<size_t>(n)]) *
               std::exp(-kTwoPi * i * static_cast<double>(n) * w);
    cplx pref = kTwoPi * std::exp(-0.5 * i * s);
    if (tail_bound_out) {
        // |term_n| = d(n) e^{-alpha n} with alpha = 2 pi e^{Im s} sin(Re s);
        // d(n) <= n gives a geometric-derivative tail bound
        double alpha = kTwoPi * std::exp(s.imag()) * std::sin(s.real());
        double q = std::exp(-alpha);
        double np1 = static_cast<double>(n_max + 1);
        double tail = std::pow(q, np1) * (np1 / (1.0 - q) + q / ((1.0 - q) * (1.0 - q)));
        *tail_bound_out = std::abs(pref) * tail;
    }
    return head + pref * sum;
}

cplx bessel_k0(cplx z) {
    if (z == cplx(0.0)) throw DomainError("bessel_k0: singular at z = 0");
    if (std::abs(z) <= 8.0) {
        // K_0 = -(log(z/2) + gamma) I_0(z) + sum_{m>=1} H_m (z^2/4)^m / (m!)^2
        cplx q = 0.25 * z * z;
        cplx term = 1.0, i0 = 1.0, hsum = 0.0;
        double h = 0.0;
        for (int m = 1; m <= 60; ++m) {
            term *= q / static_cast<double>(m * m);
            h += 1.0 / static_cast<double>(m);
            i0 += term;
            hsum += h * term;
            if (std::abs(term) * (h + 1.0) < 1e-18 * (std::abs(i0) + 1.0)) break;
        }
        return -(std::log(0.5 * z) + kEulerGamma) * i0 + hsum;
    }
    // sqrt(pi/(2z)) e^{-z} (1 - 1/(8z) + 9/(128 z^2) - ...)
    cplx sum = 1.0, term = 1.0;
    double last = 1e300;
    for (int j = 1; j <= 40; ++j) {
        double c = 2.0 * j - 1.0;
        term *= -(c * c) / (8.0 * static_cast<double>(j) * z);
        double mag = std::abs(term);
        if (mag > last) break;
        sum += term;
        if (mag < 1e-17 * std::abs(sum)) break;
        last = mag;
    }
    return std::sqrt(0.5 * kPi / z) * std::exp(-z) * sum;
}

cplx atkinson_l2_series(cplx s, long n_max, const DivisorTable& table,
                        double* tail_bound_out) {
    if (!(s.real() > 0.0)) throw DomainError("atkinson_l2_series: requires Re s > 0");
    if (!(std::abs(s) < kPi)) throw DomainError("atkinson_l2_series: requires |s| < pi");
    if (s.imag() < 0.0)
        throw DomainError("atkinson_l2_series: terms grow without bound for Im s < 0");
    if (n_max < 16) throw BadParams("atkinson_l2_series: n_max must be >= 16");
    if (n_max > table.n_max) throw TableTooSmall("atkinson_l2_series: divisor table too small");
    const cplx i(0.0, 1.0);
    cplx e = std::exp(-0.5 * s);
    double a = 4.0 * kPi * std::abs(e);       // |z_n| = a sqrt(n)
    double b = a * std::sin(0.5 * s.imag());  // Re z_n = b sqrt(n); 0 on the real axis
    cplx sum = 0.0, sum_q = 0.0, sum_h = 0.0;
    long stop = n_max;
    for (long n = 1; n <= n_max; ++n) {
        cplx z = 4.0 * kPi * i * std::sqrt(static_cast<double>(n)) * e;
        sum += static_cast<double>(table.d4[static_cast<size_t>(n)]) * bessel_k0(z);
        if (n == n_max / 4) sum_q = sum;
        if (n == n_max / 2) sum_h = sum;
        // d_4(n) <= 8n, |K_0(z)| <= 2 sqrt(pi/(2|z|)) e^{-Re z} for |z| >= 8
        if (b > 0.0 && n > n_max / 2 &&
            16.0 * static_cast<double>(n) * std::exp(-b * std::sqrt(static_cast<double>(n))) <
                1e-18 * std::abs(sum)) {
            stop = n;
            break;
        }
    }
    cplx pref = 4.0 * kPi * std::exp(-0.5 * s);
    if (tail_bound_out) {
        double u = std::sqrt(static_cast<double>(stop));
        if (b * u >= 30.0) {
            // dropped-tail bound: 16 sqrt(pi/(2 a u)) int_U^inf 2 u^3 e^{-bu} du
            double poly = 2.0 * (u * u * u / b + 3.0 * u * u / (b * b) + 6.0 * u / (b * b * b) +
                                 6.0 / (b * b * b * b));
            double head = static_cast<double>(stop) * std::exp(-b * u);
            *tail_bound_out = std::abs(pref) * 16.0 * std::sqrt(0.5 * kPi / (a * u)) *
                              (poly * std::exp(-b * u) + head);
        } else {
            // no usable decay: report the measured fluctuation of the
            // partial sums (heuristic; the series does not converge
            // absolutely here)
            *tail_bound_out = std::abs(pref) *
                              2.0 * (std::abs(sum - sum_h) + std::abs(sum_h - sum_q));
        }
    }
    return pref * sum;
}

double l2_asymptotic(double sigma, const L2AsympConstants& consts) {
    if (!(sigma > 0.0 && sigma < 1.0)) throw DomainError("l2_asymptotic: requires 0 < sigma < 1");
    double u = std::log(1.0 / sigma);
    return (((consts.a * u + consts.b) * u + consts.c) * u * u + consts.d * u + consts.e) / sigma;
}

L2AsympConstants fit_l2_constants(const std::vector<double>& sigmas,
                                  const std::vector<double>& sigma_l2_values) {
    if (sigmas.size() != sigma_l2_values.size())
        throw BadParams("fit_l2_constants: size mismatch");
    L2AsympConstants c = L2AsympConstants::pinned();
    std::vector<double> u(sigmas.size()), resid(sigmas.size());
    for (size_t j = 0; j < sigmas.size(); ++j) {
        if (!(sigmas[j] > 0.0 && sigmas[j] < 1.0))
            throw DomainError("fit_l2_constants: sigma out of (0, 1)");
        u[j] = std::log(1.0 / sigmas[j]);
        resid[j] = sigma_l2_values[j] - c.a * std::pow(u[j], 4) - c.b * std::pow(u[j], 3);
    }
    std::vector<double> coeffs = poly_least_squares(u, resid, 2);
    c.e = coeffs[0];
    c.d = coeffs[1];
    c.c = coeffs[2];
    c.cde_fitted = true;
    return c;
}

}  // namespace zetalab
