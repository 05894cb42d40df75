// Acceptance gate: runs every top-level criterion at its pinned tolerance and
// prints one pass/fail line each.  Exit code 0 iff all pass.

#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "zetalab/fit.hpp"
#include "zetalab/laplace.hpp"
#include "zetalab/mellin.hpp"
#include "zetalab/moments.hpp"
#include "zetalab/quadrature.hpp"
#include "zetalab/spectral.hpp"
#include "zetalab/zeta.hpp"

using namespace zetalab;

namespace {

int g_failures = 0;

void report(int idx, const char* name, bool pass, double metric, double tol) {
    std::printf("[%2d/14] %s  %-24s metric=%.3g tol=%.3g\n", idx, pass ? "PASS" : "FAIL", name,
                metric, tol);
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

// 1. functional equation on 100 random strip points, 1e-10 relative
void c01_functional_equation() {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> re(0.01, 0.99), im(-50.0, 50.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        cplx s(re(rng), im(rng));
        cplx z = zeta(s);
        double rel = std::abs(z - chi(s) * zeta(cplx(1.0) - s)) / (1.0 + std::abs(z));
        worst = std::max(worst, rel);
    }
    report(1, "functional-equation", worst <= 1e-10, worst, 1e-10);
}

// 2. first zero on the critical line
void c02_zero_location() {
    double m = std::abs(zeta_half_line(14.134725));
    report(2, "zero-location", m < 1e-4, m, 1e-4);
}

// 3. Euler-Maclaurin vs Riemann-Siegel across the crossover seam
void c03_evaluator_crosscheck() {
    EvalConfig em, rs;
    em.crossover_t = 100.0;
    rs.crossover_t = 10.0;
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        double t = 35.0 + 10.0 * i / 49.0;
        worst = std::max(worst, std::abs(zeta_half_line(t, em) - zeta_half_line(t, rs)));
    }
    report(3, "evaluator-crosscheck", worst <= 1e-8, worst, 1e-8);
}

// 4. Kober residual: successive differences decreasing, final < 0.05
void c04_kober() {
    double sig[4] = {0.1, 0.05, 0.02, 0.01};
    double res[4];
    for (int i = 0; i < 4; ++i)
        res[i] = laplace_transform(1, cplx(sig[i]), 1e-6).value.real() - kober_main(sig[i]);
    double d1 = std::abs(res[1] - res[0]);
    double d2 = std::abs(res[2] - res[1]);
    double d3 = std::abs(res[3] - res[2]);
    bool pass = d1 > d2 && d2 > d3 && d3 < 0.05;
    report(4, "kober-2.1", pass, d3, 0.05);
}

// 5. Z_1 principal part: second-order probe and Richardson first-order probe
void c05_principal_part() {
    const MomentPolynomial& poly = default_moment_poly(1);
    const ErrorTermTable& table = shared_error_table(1);
    double probes[3];
    double epss[3] = {0.2, 0.1, 0.05};
    for (int i = 0; i < 3; ++i) {
        double z = z1_continued(cplx(1.0 + epss[i]), poly, 1e-7, table).value.real();
        probes[i] = (epss[i] * epss[i] * z - 1.0) / epss[i];
    }
    double target = 2.0 * kEulerGamma - kLog2Pi;
    double rich = 2.0 * probes[2] - probes[1];
    double second = 0.05 * 0.05 * z1_continued(cplx(1.05), poly, 1e-7, table).value.real();
    bool pass = std::abs(rich - target) <= 0.25 * std::abs(target) && second > 0.9 &&
                second < 1.1;
    report(5, "principal-part-5.1", pass, std::abs(rich - target), 0.25 * std::abs(target));
}

// 6. direct vs continued agreement within combined err_est, 10 points per k
void c06_continuation_consistency() {
    bool pass = true;
    double worst = 0.0;
    const MomentPolynomial& p1 = default_moment_poly(1);
    const ErrorTermTable& t1 = shared_error_table(1);
    for (int i = 0; i < 10; ++i) {
        cplx s(1.3 + 1.7 * i / 9.0, i % 3 == 0 ? 0.0 : (i % 3 == 1 ? 2.0 : -5.0));
        TransformValue d = mellin_transform(1, s, 1e-5);
        TransformValue c = z1_continued(s, p1, 1e-6, t1);
        double ratio = std::abs(d.value - c.value) / (d.err_est + c.err_est);
        worst = std::max(worst, ratio);
        pass = pass && ratio <= 1.0;
    }
    const MomentPolynomial& p2 = default_moment_poly(2);
    const ErrorTermTable& t2 = shared_error_table(2);
    for (int i = 0; i < 10; ++i) {
        cplx s(1.6 + 1.4 * i / 9.0, i % 3 == 0 ? 0.0 : (i % 3 == 1 ? 2.0 : -5.0));
        TransformValue d = mellin_transform(2, s, 1e-4);
        TransformValue c = z2_continued(s, p2, 1e-6, t2);
        double ratio = std::abs(d.value - c.value) / (d.err_est + c.err_est);
        worst = std::max(worst, ratio);
        pass = pass && ratio <= 1.0;
    }
    report(6, "continuation-consistency", pass, worst, 1.0);
}

// 7. square identity at k = 1, s = 4, plus the exact general-f case
void c07_square_identity() {
    IdentityReport r = square_identity_report(1, cplx(4.0), 10000.0, 1e-3);
    IdentityReport g = square_identity_general([](double) { return cplx(1.0); }, 1.0, 2.0,
                                               cplx(3.0), 1e-10);
    bool exact = std::abs(g.lhs - cplx(9.0 / 64.0)) < 1e-12 &&
                 std::abs(g.rhs - cplx(9.0 / 64.0)) < 1e-12;
    report(7, "square-identity-4.4", r.abs_err <= 1e-3 && exact, r.abs_err, 1e-3);
}

// 8. recurrence (4.1) at k = 2, r = 1, s = 3, 1e-2 relative
void c08_recurrence() {
    ContourSpec spec{1.3, -80.0, 80.0, 1.0};
    TransformValue rhs = recurrence_rhs(2, 1, cplx(3.0), spec, 1e-3);
    TransformValue lhs = mellin_transform(2, cplx(3.0), 1e-5);
    double rel = std::abs(lhs.value - rhs.value) / std::abs(lhs.value);
    report(8, "recurrence-4.1", rel <= 1e-2, rel, 1e-2);
}

// 9. Laplace bridge at T = 20 plus the trivial bound at T in {20, 50}
void c09_bridge() {
    const double T = 20.0;
    const double tol = 1e-6;
    double t_max = T * (std::log(1.0 / tol) + 20.0);
    CumulativeMoment cm(1, t_max, 1e-8);
    QuadOptions opt;
    auto q = integrate_exp_tail(
        [&](double t) { return cplx(cm.value(std::min(t, t_max))); }, 0.0, 1.0 / T, tol, 1.1,
        opt);
    double rhs = q.real() / T;
    TransformValue l = laplace_transform(1, cplx(1.0 / T), tol);
    double err = std::abs(l.value.real() - rhs);
    double budget = std::max(1e-3, l.err_est + q.err_est / T);
    bool trivial = true;
    for (double tt : {20.0, 50.0}) {
        double ik = moment_integral(1, tt, 1e-6).value;
        double lk = laplace_transform(1, cplx(1.0 / tt), 1e-6).value.real();
        trivial = trivial && ik <= std::exp(1.0) * lk;
    }
    report(9, "laplace-bridge-1.10", err <= budget && trivial, err, budget);
}

// 10. degree-4 fit of sigma L_2(sigma) recovers 1/(2 pi^2) within 20%
void c10_l2_constant() {
    std::vector<double> xs, ys;
    for (double sg : {5e-2, 3e-2, 2e-2, 1e-2, 6e-3, 4e-3, 3e-3, 2e-3}) {
        double l2 = laplace_transform(2, cplx(sg), 1e-3).value.real();
        xs.push_back(std::log(1.0 / sg));
        ys.push_back(sg * l2);
    }
    auto c = poly_least_squares(xs, ys, 4);
    double a = 1.0 / (2.0 * kPi * kPi);
    double rel = std::abs(c[4] - a) / a;
    report(10, "l2-leading-constant", rel <= 0.20, rel, 0.20);
}

// 11. mean-square probes: bounded T^{-3/2} ratio, |E_1|/T decreasing
void c11_mean_square() {
    const MomentPolynomial& poly = default_moment_poly(1);
    double lo = 1e300, hi = 0.0;
    for (double T : {500.0, 1000.0, 2000.0}) {
        double r = mean_square_error_term(1, T, poly, 1e-3) / std::pow(T, 1.5);
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    const ErrorTermTable& table = shared_error_table(1);
    bool decreasing = true;
    double prev = 1e300;
    for (double T : {500.0, 1000.0, 2000.0}) {
        double r = std::abs(table.eval(T)) / T;
        decreasing = decreasing && r < prev;
        prev = r;
    }
    report(11, "mean-square-3.12", hi <= 4.0 * lo && decreasing, hi / lo, 4.0);
}

// 12. spectral algebra on synthetic tables
void c12_spectral() {
    bool pass = true;
    for (int i = 1; i <= 20; ++i) {
        double y = 0.5 * i;
        pass = pass && std::abs(big_r(-y) - std::conj(big_r(y))) <=
                           1e-10 * std::abs(big_r(y)) + 1e-14;
    }
    std::vector<double> win;
    for (double y : {5.0, 10.0, 20.0, 50.0, 100.0}) win.push_back(std::abs(big_r(y)) * std::sqrt(y));
    for (double v : win) pass = pass && v < 3.0 * win[2] && v > win[2] / 3.0;

    SpectralTable one;
    one.m = 3;
    one.entries = {{10.0, 1.0}};
    cplx v = spectral_sum_l2(cplx(0.5), one);
    pass = pass && std::abs(v.imag()) < 1e-10 * std::abs(v.real()) + 1e-14;

    SpectralTable whole;
    whole.m = 3;
    whole.entries = {{9.5, 0.25}, {12.2, 0.11}, {14.3, 0.07}, {16.1, 0.04}};
    SpectralTable lo = whole, hi = whole;
    lo.entries.resize(2);
    hi.entries.erase(hi.entries.begin(), hi.entries.begin() + 2);
    cplx split = spectral_sum_l2(cplx(0.4), lo) + spectral_sum_l2(cplx(0.4), hi);
    pass = pass && std::abs(spectral_sum_l2(cplx(0.4), whole) - split) < 1e-15;

    double T = 1000.0, G = 100.0, kap = 9.5, w = 0.25;
    double itg = i_tg_spectral(T, G, SpectralTable{{{kap, w}}, 3});
    double itg_ref = kPi / std::sqrt(2.0 * T) * w / std::sqrt(kap) *
                     std::sin(kap * std::log(kap / (4.0 * std::exp(1.0) * T))) *
                     std::exp(-0.25 * std::pow(G * kap / T, 2.0));
    pass = pass && std::abs(itg - itg_ref) < 1e-14;

    double sm = s_m_sum(3, 9.0, 10.0, 500.0, SpectralTable{{{9.5, 0.25}}, 3});
    double sm_ref = 0.25 * std::cos(9.5 * std::log(4.0 * std::exp(1.0) * 500.0 / 9.5));
    pass = pass && std::abs(sm - sm_ref) < 1e-14;

    double st = s_t_delta(T, 100.0, SpectralTable{{{kap, w}}, 3}, 1e-8);
    double st_ref = kPi * std::sqrt(0.5 * T) * w * std::pow(kap, -1.5) *
                    std::cos(kap * std::log(kap / (4.0 * std::exp(1.0) * T))) *
                    std::exp(-0.25 * std::pow(100.0 * kap / T, 2.0));
    pass = pass && std::abs(st - st_ref) < 1e-12;

    report(12, "spectral-algebra", pass, pass ? 0.0 : 1.0, 1.0);
}

// 13. (12/pi^2)/4! = 1/(2 pi^2) exactly
void c13_constant_identity() {
    double lhs = (12.0 / (kPi * kPi)) / 24.0;
    double rhs = 1.0 / (2.0 * kPi * kPi);
    double err = std::abs(lhs - rhs);
    report(13, "pole-coefficient-link", err < 1e-15, err, 1e-15);
}

// 14. quadrature honesty: actual error <= 3 err_est on >= 95% of the
// closed-form suite
void c14_quadrature_honesty() {
    struct Probe {
        double actual, est;
    };
    std::vector<Probe> ps;
    auto fin = [&](Integrand f, double a, double b, double exact, QuadOptions opt = {}) {
        auto q = integrate_adaptive(f, a, b, 1e-9, opt);
        ps.push_back({std::abs(q.real() - exact), q.err_est});
    };
    auto expt = [&](Integrand f, double a, double sg, double growth, double exact) {
        auto q = integrate_exp_tail(f, a, sg, 1e-9, growth);
        ps.push_back({std::abs(q.real() - exact), q.err_est});
    };
    auto alg = [&](Integrand f, double a, double sg, double growth, double exact) {
        auto q = integrate_algebraic_tail(f, a, sg, growth, 1e-9);
        ps.push_back({std::abs(q.real() - exact), q.err_est});
    };
    QuadOptions split;
    split.split_endpoints = true;
    fin([](double x) { return cplx(x * x); }, 0.0, 1.0, 1.0 / 3.0);
    fin([](double x) { return cplx(std::sin(x)); }, 0.0, kPi, 2.0);
    fin([](double x) { return cplx(std::exp(x)); }, 0.0, 1.0, std::exp(1.0) - 1.0);
    fin([](double x) { return cplx(1.0 / (1.0 + x * x)); }, 0.0, 1.0, kPi / 4.0);
    fin([](double x) { return cplx(std::log(x)); }, 0.0, 1.0, -1.0, split);
    fin([](double x) { return cplx(1.0 / std::sqrt(x)); }, 0.0, 1.0, 2.0, split);
    fin([](double x) { return cplx(std::sqrt(x)); }, 0.0, 1.0, 2.0 / 3.0);
    fin([](double x) { return cplx(1.0 / x); }, 1.0, 2.0, std::log(2.0));
    fin([](double x) { return cplx(std::sin(100.0 * x)); }, 0.0, 1.0,
        (1.0 - std::cos(100.0)) / 100.0);
    fin([](double x) { return cplx(std::cos(40.0 * x) * std::cos(40.0 * x)); }, 0.0, kTwoPi,
        kPi);
    fin([](double x) { return cplx(1.0 / (x * x + 1e-4)); }, -1.0, 1.0,
        200.0 * std::atan(100.0));
    fin([](double x) { return cplx(1.0 / std::sqrt(1.0 - x * x)); }, 0.0, 0.99,
        std::asin(0.99));
    expt([](double) { return cplx(1.0); }, 0.0, 1.0, 0.0, 1.0);
    expt([](double x) { return cplx(x); }, 0.0, 2.0, 1.0, 0.25);
    expt([](double x) { return cplx(std::cos(10.0 * x)); }, 0.0, 1.0, 0.0, 1.0 / 101.0);
    expt([](double x) { return cplx(x * x); }, 0.0, 1.0, 2.0, 2.0);
    expt([](double x) { return cplx(std::exp(-x * x + x)); }, 0.0, 1.0, 0.0, kSqrtPi / 2.0);
    expt([](double x) { return cplx(std::sin(x)); }, 0.0, 1.0, 0.0, 0.5);
    alg([](double) { return cplx(1.0); }, 1.0, 3.0, 0.0, 0.5);
    alg([](double x) { return cplx(std::log(x)); }, 1.0, 2.0, 0.1, 1.0);
    alg([](double x) { double l = std::log(x); return cplx(l * l); }, 1.0, 3.0, 0.2, 0.25);
    int bad = 0;
    for (const auto& p : ps)
        if (p.actual > 3.0 * p.est) ++bad;
    double frac = 1.0 - static_cast<double>(bad) / ps.size();
    report(14, "quadrature-honesty", frac >= 0.95, frac, 0.95);
}

}  // namespace

int main() {
    std::setvbuf(stdout, nullptr, _IONBF, 0);
    c01_functional_equation();
    c02_zero_location();
    c03_evaluator_crosscheck();
    c04_kober();
    c05_principal_part();
    c06_continuation_consistency();
    c07_square_identity();
    c08_recurrence();
    c09_bridge();
    c10_l2_constant();
    c11_mean_square();
    c12_spectral();
    c13_constant_identity();
    c14_quadrature_honesty();
    std::printf("%d/14 criteria passed\n", 14 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
