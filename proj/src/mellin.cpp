#include "zetalab/mellin.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "zetalab/fit.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {
namespace {

constexpr double kDirectMargin = 0.25;

// |zeta(1/2+ix)|^{2k} on a uniform grid with local cubic interpolation,
// extended lazily; backs the inner integrals of the square identity.
class ZetaPowGrid {
  public:
    ZetaPowGrid(int k, double x_hi, const EvalConfig& cfg)
        : k_(k), cfg_(cfg), h_(kTwoPi / (24.0 * zeta_freq(x_hi))) {
        v_.push_back(zeta_pow_modulus(1.0, k_, cfg_));
    }

    double operator()(double x) {
        ensure(x);
        double t = (x - 1.0) / h_;
        long i = static_cast<long>(t);
        long j0 = std::clamp<long>(i - 1, 0, static_cast<long>(v_.size()) - 4);
        double u = t - static_cast<double>(j0);  // in node units from j0
        // cubic Lagrange on nodes j0 .. j0+3
        double w0 = -(u - 1) * (u - 2) * (u - 3) / 6.0;
        double w1 = u * (u - 2) * (u - 3) / 2.0;
        double w2 = -u * (u - 1) * (u - 3) / 2.0;
        double w3 = u * (u - 1) * (u - 2) / 6.0;
        return w0 * v_[j0] + w1 * v_[j0 + 1] + w2 * v_[j0 + 2] + w3 * v_[j0 + 3];
    }

  private:
    void ensure(double x) {
        long need = static_cast<long>((x - 1.0) / h_) + 3;
        while (static_cast<long>(v_.size()) <= need)
            v_.push_back(zeta_pow_modulus(1.0 + h_ * static_cast<double>(v_.size()), k_, cfg_));
    }

    int k_;
    EvalConfig cfg_;
    double h_;
    std::vector<double> v_;
};

// Continuation core shared by z1_continued / z2_continued.
TransformValue z_continued_impl(int k, cplx s, const MomentPolynomial& poly, double tol,
                                const ErrorTermTable& table) {
    double sig = s.real();
    double sigma_min = (k == 1) ? 0.25 : 0.5;
    if (!(sig > sigma_min)) throw DomainError("z_continued: Re s outside the continuation domain");
    if (std::abs(s - cplx(1.0)) < 0.02) throw PoleError("z_continued: too close to the pole s = 1");
    if (k == 2 && std::abs(sig - 0.5) < 0.02)
        throw DomainError("z_continued: Re s too close to the k = 2 boundary line");
    if (!(tol > 0)) throw BadParams("z_continued: tol must be > 0");
    poly.validate();
    if (poly.k != k || table.k() != k) throw BadParams("z_continued: k mismatch");

    // rational part: a_n n!/(s-1)^{n+1} + sum_m (a_{m-1}(m-1)! + a_m m!)/(s-1)^m
    int n = static_cast<int>(poly.coeffs.size()) - 1;  // k^2
    double fact[6] = {1, 1, 2, 6, 24, 120};
    cplx sm1 = s - 1.0;
    cplx inv = 1.0 / sm1;
    cplx invp = inv;  // (s-1)^{-m}
    cplx main = 0.0;
    for (int m = 1; m <= n; ++m) {
        main += (poly.coeffs[m - 1] * fact[m - 1] + poly.coeffs[m] * fact[m]) * invp;
        invp *= inv;
    }
    main += poly.coeffs[n] * fact[n] * invp;

    double tau = s.imag();
    QuadOptions opt;
    opt.freq_hint = [tau](double x) { return zeta_freq(x) + std::abs(tau) / x; };
    auto g = [&](double x) { return table.eval(x) * std::exp(-(s + 1.0) * std::log(x)); };
    double x_hi = table.x_max();
    QuadResult q = integrate_adaptive(g, 1.0, x_hi, tol / (2.0 * (std::abs(s) + 1.0)), opt);

    cplx value = main - table.eval(1.0) + s * q.value;

    // dropped tail via the mean-square bound int_1^T E_k^2 <= C T^p,
    // p = 3/2 (k = 1) or 2 (k = 2); C measured on the table's last dyadic
    // block, doubled.  Dyadic Cauchy-Schwarz gives the block sum below.
    double p = (k == 1) ? 1.5 : 2.0;
    double theta = 0.5 * (p - 1.0);
    double m_block = 0.0;
    {
        int nprobe = 512;
        double lo = 0.5 * x_hi, step = (x_hi - lo) / nprobe;
        double prev = table.eval(lo) * table.eval(lo);
        for (int i = 1; i <= nprobe; ++i) {
            double e = table.eval(lo + step * i);
            double cur = e * e;
            m_block += 0.5 * (prev + cur) * step;
            prev = cur;
        }
    }
    double c_ms = 2.0 * m_block / (std::pow(x_hi, p) - std::pow(0.5 * x_hi, p));
    double tail = std::abs(s) * std::sqrt(c_ms / (2.0 * sig + 1.0)) * std::pow(2.0, 0.5 * p) *
                  std::pow(x_hi, theta - sig) / (1.0 - std::pow(2.0, theta - sig));
    double err = std::abs(s) * (q.err_est + table.interp_err() / sig) + tail;
    return {value, err};
}

}  // namespace

const MomentPolynomial& default_moment_poly(int k) {
    if (k == 1) {
        static const MomentPolynomial p1 = MomentPolynomial::k1_pinned();
        return p1;
    }
    if (k != 2) throw BadParams("default_moment_poly: k must be 1 or 2");
    // k = 2: a_4 pinned at 1/(2 pi^2), lower coefficients fitted once from
    // cumulative fourth-moment samples.
    static const MomentPolynomial p2 = [] {
        CumulativeMoment cm(2, 3100.0, 1e-3);
        std::vector<MomentSample> samples;
        for (double t : {500.0, 1000.0, 1500.0, 2000.0, 2500.0, 3000.0})
            samples.push_back({t, cm.value(t), cm.err_at(t)});
        return fit_main_coeffs(2, samples, {{4, 1.0 / (2.0 * kPi * kPi)}});
    }();
    return p2;
}

const ErrorTermTable& shared_error_table(int k) {
    if (k == 1) {
        static const ErrorTermTable t1(1, default_moment_poly(1), 3000.0, {}, 16.0);
        return t1;
    }
    if (k != 2) throw BadParams("shared_error_table: k must be 1 or 2");
    static const ErrorTermTable t2(2, default_moment_poly(2), 3000.0, {}, 16.0);
    return t2;
}

double mellin_abscissa(int k) {
    switch (k) {
        case 1:
        case 2: return 1.0;
        case 3: return 1.25;
        case 4: return 1.5;
        default: throw BadParams("mellin_abscissa: k must be in [1, 4]");
    }
}

TransformValue mellin_transform(int k, cplx s, double tol, const EvalConfig& cfg, double x_cap) {
    double c = mellin_abscissa(k);
    double sig = s.real();
    if (!(sig > c + kDirectMargin))
        throw DomainError("mellin_transform: Re s inside the convergence margin");
    if (!(tol > 0)) throw BadParams("mellin_transform: tol must be > 0");
    if (!(x_cap >= 128.0)) throw BadParams("mellin_transform: x_cap too small");
    double tau = s.imag();
    QuadOptions opt;
    opt.freq_hint = [tau](double x) { return zeta_freq(x) + std::abs(tau) / x; };
    auto f = [&](double x) {
        return zeta_pow_modulus(x, k, cfg) * std::exp(-s * std::log(x));
    };
    auto fabsk = [&](double x) -> cplx { return zeta_pow_modulus(x, k, cfg); };

    // grow the truncation point until the integration-by-parts tail bound
    // (I_k(x) <= C x^{c+0.05}, C from the cumulative integral so far) is small
    double g = c + 0.05;
    cplx value = 0.0;
    double err = 0.0;
    double i_acc = 0.0;  // I_k(x_hi) - I_k(1)
    double x_lo = 1.0, x_hi = std::min(64.0, x_cap);
    double tail = 0.0;
    for (;;) {
        QuadResult q = integrate_adaptive(f, x_lo, x_hi, tol / 8.0, opt);
        value += q.value;
        err += q.err_est;
        QuadResult qi = integrate_adaptive(fabsk, x_lo, x_hi,
                                           0.02 * std::max(i_acc, 10.0), opt);
        i_acc += qi.value.real();
        double c_est = 2.0 * i_acc / std::pow(x_hi, g);
        tail = std::abs(s) * c_est * std::pow(x_hi, g - sig) / (sig - g) +
               i_acc * std::pow(x_hi, -sig);
        if (tail < tol / 2.0 || x_hi >= x_cap) break;
        x_lo = x_hi;
        x_hi = std::min(2.0 * x_hi, x_cap);
    }
    return {value, err + tail};
}

TransformValue z1_continued(cplx s, const MomentPolynomial& poly, double tol,
                            const EvalConfig& cfg) {
    ErrorTermTable table(1, poly, 3000.0, cfg);
    return z_continued_impl(1, s, poly, tol, table);
}

TransformValue z1_continued(cplx s, const MomentPolynomial& poly, double tol,
                            const ErrorTermTable& table) {
    return z_continued_impl(1, s, poly, tol, table);
}

TransformValue z2_continued(cplx s, const MomentPolynomial& poly, double tol,
                            const EvalConfig& cfg) {
    ErrorTermTable table(2, poly, 3000.0, cfg);
    return z_continued_impl(2, s, poly, tol, table);
}

TransformValue z2_continued(cplx s, const MomentPolynomial& poly, double tol,
                            const ErrorTermTable& table) {
    return z_continued_impl(2, s, poly, tol, table);
}

TransformValue recurrence_rhs(int k, int r, cplx s, const ContourSpec& spec, double tol,
                              const EvalConfig& cfg) {
    if (k < 2 || k > 4) throw BadParams("recurrence_rhs: k must be in [2, 4]");
    if (r < 1 || r >= k) throw BadParams("recurrence_rhs: requires 1 <= r <= k-1");
    if (!(tol > 0)) throw BadParams("recurrence_rhs: tol must be > 0");
    spec.validate();
    int ka = k - r;
    double ca = spec.c, cb = 1.0 + s.real() - spec.c;
    if (!(ca > mellin_abscissa(ka) + kDirectMargin) || !(cb > mellin_abscissa(r) + kDirectMargin))
        throw DomainError("recurrence_rhs: contour leaves a factor's convergence domain");

    auto factor = [&](int m, cplx w) -> cplx {
        if (m == 1) return z_continued_impl(1, w, default_moment_poly(1), 1e-7, shared_error_table(1)).value;
        if (m == 2) return z_continued_impl(2, w, default_moment_poly(2), 1e-7, shared_error_table(2)).value;
        return mellin_transform(m, w, 1e-3, cfg, 8192.0).value;
    };
    auto F = [&](cplx w) { return factor(ka, w) * factor(r, 1.0 + s - w); };

    // conjugate symmetry: for real s and a symmetric window the lower half
    // line is the conjugate of the upper half
    bool sym = std::abs(s.imag()) < 1e-14 && std::abs(spec.t_min + spec.t_max) < 1e-12;
    double step = std::min(spec.max_step, 1.0);
    auto piece = [&](double a, double b, double ptol) -> QuadResult {
        if (sym) {
            QuadResult q = contour_line_integral(F, {spec.c, std::max(a, 0.0), b, step}, ptol);
            q.value = 2.0 * q.value.real();
            q.err_est *= 2.0;
            return q;
        }
        QuadResult qu = contour_line_integral(F, {spec.c, a, b, step}, ptol);
        QuadResult qd = contour_line_integral(F, {spec.c, -b, -a, step}, ptol);
        qu.value += qd.value;
        qu.err_est += qd.err_est;
        return qu;
    };

    QuadResult q0 = sym ? piece(0.0, spec.t_max, tol / 4.0)
                        : contour_line_integral(F, {spec.c, spec.t_min, spec.t_max, step}, tol / 4.0);
    cplx value = q0.value;
    double err = q0.err_est;

    // extend in 20-unit strips until three straight extensions each fall
    // below tol/4 and enough strips exist to model the tail; the remainder
    // past the window is extrapolated from a power-law fit of the strip
    // magnitudes (heuristic: no usable decay rate for Z_k on vertical lines)
    double hi = spec.t_max;
    int calm = 0;
    std::vector<double> log_t, log_d;
    cplx dir = 1.0;
    for (int ext = 0; ext < 50 && (calm < 3 || static_cast<int>(log_t.size()) < 10); ++ext) {
        QuadResult qe = piece(hi, hi + 20.0, tol / 16.0);
        value += qe.value;
        err += qe.err_est;
        double mag = std::abs(qe.value);
        if (mag > 0.0) {
            log_t.push_back(std::log(hi + 10.0));
            log_d.push_back(std::log(mag));
            dir = qe.value / mag;
        }
        hi += 20.0;
        calm = (mag < tol / 4.0) ? calm + 1 : 0;
    }
    if (calm < 3) throw NoConvergence("recurrence_rhs: contour extensions did not settle");
    double tail = 0.0;
    if (log_t.size() >= 4) {
        std::vector<double> line = poly_least_squares(log_t, log_d, 1);
        double alpha = std::clamp(-line[1], 1.1, 5.0);
        double a_fit = std::exp(line[0]) / 20.0;  // strip magnitude = 20 a t^{-alpha}
        tail = a_fit * std::pow(hi, 1.0 - alpha) / (alpha - 1.0);
        value += tail * dir;
    }
    return {value, err + tail};
}

IdentityReport square_identity_report(int k, cplx s, double x_max, double tol,
                                      const EvalConfig& cfg) {
    double c = mellin_abscissa(k);
    double sig = s.real();
    if (!(sig > c + 1.0 + kDirectMargin))
        throw DomainError("square_identity_report: Re s inside the product margin");
    if (!(x_max >= 4.0)) throw BadParams("square_identity_report: x_max must be >= 4");
    if (!(tol > 0)) throw BadParams("square_identity_report: tol must be > 0");

    TransformValue z = mellin_transform(k, s, tol / 8.0, cfg);
    cplx lhs = z.value * z.value;

    ZetaPowGrid grid(k, x_max, cfg);
    auto inner = [&](double x) -> cplx {
        double a = std::sqrt(x), b = x;
        if (!(a < b)) return 0.0;
        QuadOptions opt;
        opt.freq_hint = [x](double u) { return zeta_freq(u) + zeta_freq(x / u) * x / (u * u); };
        auto h = [&](double u) -> cplx { return grid(u) * grid(x / u) / u; };
        return integrate_adaptive(h, a, b, tol / 16.0, opt).value;
    };
    auto outer_f = [&](double x) -> cplx { return x <= x_max ? inner(x) : cplx(0.0); };
    QuadResult outer =
        integrate_algebraic_tail(outer_f, 1.0, sig, 2.0 * c - 1.75, tol / 4.0);
    cplx rhs = 2.0 * outer.value;

    double abs_err = std::abs(lhs - rhs);
    return {lhs, rhs, abs_err, tol, abs_err <= tol};
}

IdentityReport square_identity_general(const std::function<cplx(double)>& f, double a, double b,
                                       cplx s, double tol) {
    if (!(a > 0.0) || !(a < b)) throw BadParams("square_identity_general: requires 0 < a < b");
    if (!(tol > 0)) throw BadParams("square_identity_general: tol must be > 0");
    auto weighted = [&](double x) { return f(x) * std::exp(-s * std::log(x)); };
    cplx base = integrate_adaptive(weighted, a, b, tol / 8.0).value;
    cplx lhs = base * base;

    auto inner = [&](double x) -> cplx {
        double lo = std::sqrt(x), hi = std::min(x / a, b);
        if (!(lo < hi)) return 0.0;
        auto h = [&](double u) { return f(u) * f(x / u) / u; };
        return integrate_adaptive(h, lo, hi, tol / 16.0).value;
    };
    cplx rhs = 2.0 * integrate_adaptive(
                         [&](double x) { return inner(x) * std::exp(-s * std::log(x)); },
                         a * a, b * b, tol / 8.0)
                         .value;
    double abs_err = std::abs(lhs - rhs);
    return {lhs, rhs, abs_err, tol, abs_err <= tol};
}

IdentityReport exp_smoothed_moment(int k, double T, double tol, const EvalConfig& cfg) {
    if (k != 1 && k != 2) throw BadParams("exp_smoothed_moment: k must be 1 or 2");
    if (!(T >= 10.0)) throw DomainError("exp_smoothed_moment: requires T >= 10");
    if (!(tol > 0)) throw BadParams("exp_smoothed_moment: tol must be > 0");

    QuadOptions opt;
    opt.freq_hint = zeta_freq;
    auto f = [&](double x) -> cplx { return zeta_pow_modulus(x, k, cfg); };
    QuadResult lq = integrate_exp_tail(f, 1.0, 1.0 / T, tol / 4.0, 1.0, opt);
    cplx lhs = lq.value;

    double c = mellin_abscissa(k) + kDirectMargin;
    const MomentPolynomial& poly = default_moment_poly(k);
    const ErrorTermTable& table = shared_error_table(k);
    auto F = [&](cplx s) {
        return gamma(s) * std::exp(s * std::log(T)) *
               z_continued_impl(k, s, poly, tol / 64.0, table).value;
    };
    // window from Gamma decay: |Gamma(c+it)| ~ e^{-pi|t|/2}
    double t_half = (2.0 / kPi) * (std::log(1.0 / tol) + (c + 1.0) * std::log(T) + 25.0);
    ContourSpec spec{c, -t_half, t_half, 0.5};
    QuadResult rq = contour_line_integral(F, spec, tol / 4.0);
    cplx rhs = rq.value;

    double abs_err = std::abs(lhs - rhs);
    return {lhs, rhs, abs_err, tol, abs_err <= tol};
}

}  // namespace zetalab
