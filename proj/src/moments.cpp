#include "zetalab/moments.hpp"

#include <algorithm>
#include <cmath>

#include "zetalab/fit.hpp"
#include "zetalab/quadrature.hpp"

namespace zetalab {

double MomentPolynomial::eval(double y) const {
    double r = 0.0;
    for (size_t j = coeffs.size(); j-- > 0;) r = r * y + coeffs[j];
    return r;
}

void MomentPolynomial::validate() const {
    if (k < 1) throw ValidationError("MomentPolynomial: k must be >= 1");
    size_t want = static_cast<size_t>(k) * static_cast<size_t>(k) + 1;
    if (coeffs.size() != want || provenance.size() != want)
        throw ValidationError("MomentPolynomial: need k^2 + 1 coefficients");
    if (k == 2) {
        double a4 = 1.0 / (2.0 * kPi * kPi);
        if (std::abs(coeffs[4] - a4) > 1e-15 || provenance[4] != Provenance::pinned)
            throw ValidationError("MomentPolynomial: a_{4,2} must stay pinned at 1/(2 pi^2)");
    }
}

MomentPolynomial MomentPolynomial::k1_pinned() {
    MomentPolynomial p;
    p.k = 1;
    p.coeffs = {2.0 * kEulerGamma - 1.0 - kLog2Pi, 1.0};
    p.provenance = {Provenance::pinned, Provenance::pinned};
    return p;
}

double zeta_freq(double t) { return std::log(std::max(t, 20.0) / kTwoPi + 1.0) + 0.5; }

MomentSample moment_integral(int k, double t_upper, double tol, const EvalConfig& cfg) {
    if (k < 1 || k > 4) throw BadParams("moment_integral: k must be in [1, 4]");
    if (t_upper < 0.0) throw DomainError("moment_integral: T must be >= 0");
    if (!(tol > 0.0)) throw BadParams("moment_integral: tol must be > 0");
    if (t_upper == 0.0) return {0.0, 0.0, 0.0};
    auto f = [k, &cfg](double t) -> cplx { return zeta_pow_modulus(t, k, cfg); };
    QuadOptions opt;
    opt.freq_hint = zeta_freq;
    QuadResult r = integrate_adaptive(f, 0.0, t_upper, tol, opt);
    return {t_upper, r.value.real(), r.err_est};
}

double main_term(const MomentPolynomial& poly, double t) {
    if (!(t > 0.0)) throw DomainError("main_term: T must be > 0");
    poly.validate();
    return t * poly.eval(std::log(t));
}

double error_term(int k, double t, const MomentPolynomial& poly, double tol,
                  const EvalConfig& cfg) {
    if (!(t > 0.0)) throw DomainError("error_term: T must be > 0");
    return moment_integral(k, t, tol, cfg).value - main_term(poly, t);
}

MomentPolynomial fit_main_coeffs(int k, const std::vector<MomentSample>& samples,
                                 const std::map<int, double>& pinned) {
    if (k < 1) throw BadParams("fit_main_coeffs: k must be >= 1");
    const int n_coeffs = k * k + 1;
    for (const auto& [idx, val] : pinned) {
        (void)val;
        if (idx < 0 || idx >= n_coeffs) throw BadParams("fit_main_coeffs: pinned index out of range");
    }
    const int n_free = n_coeffs - static_cast<int>(pinned.size());
    if (static_cast<int>(samples.size()) < n_free + 2)
        throw Underdetermined("fit_main_coeffs: need at least n_free + 2 samples");
    for (size_t i = 0; i < samples.size(); ++i) {
        if (!(samples[i].t > 0.0)) throw BadParams("fit_main_coeffs: sample T must be > 0");
        for (size_t j = i + 1; j < samples.size(); ++j)
            if (samples[i].t == samples[j].t)
                throw BadParams("fit_main_coeffs: sample T values must be distinct");
    }
    // y_i = I(T_i)/T_i minus the pinned part, regressed on the free powers
    std::vector<std::vector<double>> cols(static_cast<size_t>(n_free));
    std::vector<double> rhs(samples.size());
    std::vector<int> free_idx;
    for (int j = 0; j < n_coeffs; ++j)
        if (!pinned.count(j)) free_idx.push_back(j);
    for (size_t i = 0; i < samples.size(); ++i) {
        double u = std::log(samples[i].t);
        double y = samples[i].value / samples[i].t;
        for (const auto& [idx, val] : pinned) y -= val * std::pow(u, idx);
        rhs[i] = y;
        for (size_t c = 0; c < free_idx.size(); ++c)
            cols[c].push_back(std::pow(u, free_idx[c]));
    }
    // reuse the polynomial solver through an explicit normal projection:
    // build a Vandermonde-like system in the free powers only
    std::vector<double> coeffs(static_cast<size_t>(n_coeffs), 0.0);
    std::vector<Provenance> prov(static_cast<size_t>(n_coeffs), Provenance::fitted);
    for (const auto& [idx, val] : pinned) {
        coeffs[static_cast<size_t>(idx)] = val;
        prov[static_cast<size_t>(idx)] = Provenance::pinned;
    }
    if (n_free > 0) {
        // When the free indices are contiguous from 0 this is a plain
        // polynomial fit; otherwise fall back to a generic LS solve.
        bool contiguous = true;
        for (int c = 0; c < n_free; ++c)
            if (free_idx[static_cast<size_t>(c)] != c) contiguous = false;
        std::vector<double> u(samples.size());
        for (size_t i = 0; i < samples.size(); ++i) u[i] = std::log(samples[i].t);
        if (contiguous) {
            std::vector<double> fitted = poly_least_squares(u, rhs, n_free - 1);
            for (int c = 0; c < n_free; ++c) coeffs[static_cast<size_t>(c)] = fitted[static_cast<size_t>(c)];
        } else {
            // full-degree fit, then read off the free entries; the pinned
            // powers were already subtracted from the data
            std::vector<double> fitted = poly_least_squares(u, rhs, n_coeffs - 1);
            for (int c : free_idx) coeffs[static_cast<size_t>(c)] = fitted[static_cast<size_t>(c)];
        }
    }
    MomentPolynomial p;
    p.k = k;
    p.coeffs = std::move(coeffs);
    p.provenance = std::move(prov);
    p.validate();
    return p;
}

CumulativeMoment::CumulativeMoment(int k, double t_max, double tol, const EvalConfig& cfg)
    : k_(k), t_max_(t_max), cfg_(cfg) {
    if (k < 1 || k > 4) throw BadParams("CumulativeMoment: k must be in [1, 4]");
    if (!(t_max > 0.0)) throw BadParams("CumulativeMoment: t_max must be > 0");
    if (!(tol > 0.0)) throw BadParams("CumulativeMoment: tol must be > 0");
    auto f = [this](double t) -> cplx { return zeta_pow_modulus(t, k_, cfg_); };
    QuadOptions opt;
    opt.freq_hint = zeta_freq;
    knots_.push_back(0.0);
    prefix_.push_back(0.0);
    preferr_.push_back(0.0);
    double x = 0.0;
    double tol_per_unit = tol / t_max;
    while (x < t_max_) {
        double step = kPi / zeta_freq(x);
        double next = std::min(t_max_, x + step);
        QuadResult r = integrate_adaptive(f, x, next, tol_per_unit * (next - x), opt);
        knots_.push_back(next);
        prefix_.push_back(prefix_.back() + r.value.real());
        preferr_.push_back(preferr_.back() + r.err_est);
        x = next;
    }
}

double CumulativeMoment::value(double t) const {
    if (t < 0.0 || t > t_max_ * (1.0 + 1e-12))
        throw DomainError("CumulativeMoment: t outside the table range");
    t = std::min(t, t_max_);
    size_t idx = static_cast<size_t>(
        std::upper_bound(knots_.begin(), knots_.end(), t) - knots_.begin() - 1);
    double base = prefix_[idx];
    if (t <= knots_[idx]) return base;
    auto f = [this](double x) -> cplx { return zeta_pow_modulus(x, k_, cfg_); };
    QuadOptions opt;
    opt.freq_hint = zeta_freq;
    QuadResult r = integrate_adaptive(f, knots_[idx], t, 1e-9 * (t - knots_[idx] + 1.0), opt);
    return base + r.value.real();
}

double CumulativeMoment::err_at(double t) const {
    if (t < 0.0) throw DomainError("CumulativeMoment: t must be >= 0");
    t = std::min(t, t_max_);
    size_t idx = static_cast<size_t>(
        std::upper_bound(knots_.begin(), knots_.end(), t) - knots_.begin() - 1);
    return preferr_[idx] + 1e-9;
}

double CumulativeMoment::error_term(double t, const MomentPolynomial& poly) const {
    return value(t) - main_term(poly, t);
}

ErrorTermTable::ErrorTermTable(int k, const MomentPolynomial& poly, double x_max,
                               const EvalConfig& cfg, double points_per_feature)
    : k_(k), poly_(poly), cfg_(cfg) {
    if (k < 1 || k > 4) throw BadParams("ErrorTermTable: k must be in [1, 4]");
    if (!(x_max > 2.0)) throw BadParams("ErrorTermTable: x_max must be > 2");
    if (!(points_per_feature >= 2.0)) throw BadParams("ErrorTermTable: grid too coarse");
    poly_.validate();
    auto f = [this](double t) -> cplx { return zeta_pow_modulus(t, k_, cfg_); };
    QuadOptions opt;
    opt.freq_hint = zeta_freq;
    double i_at_1 = integrate_adaptive(f, 0.0, 1.0, 1e-12, opt).value.real();
    double acc = i_at_1;
    double x = 1.0;
    knots_.push_back(x);
    e_.push_back(acc - main_term(poly_, x));
    d_.push_back(deriv(x));
    long count = 0;
    while (x < x_max) {
        double h = kTwoPi / (points_per_feature * zeta_freq(x));
        double next = std::min(x_max, x + h);
        acc += integrate_adaptive(f, x, next, 1e-9 * (next - x), {}).value.real();
        if (++count % 64 == 0) {
            // probe the Hermite reconstruction against the true midpoint value
            double mid = 0.5 * (x + next);
            double true_mid = acc - integrate_adaptive(f, mid, next, 1e-10, {}).value.real() -
                              main_term(poly_, mid);
            double t = (mid - x) / (next - x);
            double e0 = e_.back(), d0 = d_.back();
            double e1 = acc - main_term(poly_, next), d1 = deriv(next);
            double hh = next - x;
            double h00 = (1 + 2 * t) * (1 - t) * (1 - t), h10 = t * (1 - t) * (1 - t);
            double h01 = t * t * (3 - 2 * t), h11 = t * t * (t - 1);
            double interp = h00 * e0 + h10 * hh * d0 + h01 * e1 + h11 * hh * d1;
            interp_err_ = std::max(interp_err_, 2.0 * std::abs(interp - true_mid));
        }
        x = next;
        knots_.push_back(x);
        e_.push_back(acc - main_term(poly_, x));
        d_.push_back(deriv(x));
    }
}

double ErrorTermTable::deriv(double x) const {
    if (!(x > 0.0)) throw DomainError("ErrorTermTable: x must be > 0");
    double y = std::log(x);
    double p = poly_.eval(y);
    double dp = 0.0;
    for (size_t j = 1; j < poly_.coeffs.size(); ++j)
        dp += static_cast<double>(j) * poly_.coeffs[j] * std::pow(y, static_cast<double>(j - 1));
    return zeta_pow_modulus(x, k_, cfg_) - p - dp;
}

double ErrorTermTable::eval(double x) const {
    if (x < knots_.front() || x > knots_.back() * (1.0 + 1e-12))
        throw DomainError("ErrorTermTable: x outside the table range");
    x = std::min(x, knots_.back());
    size_t i = static_cast<size_t>(
        std::upper_bound(knots_.begin(), knots_.end(), x) - knots_.begin());
    if (i == 0) i = 1;
    if (i >= knots_.size()) i = knots_.size() - 1;
    double x0 = knots_[i - 1], x1 = knots_[i];
    double h = x1 - x0;
    double t = (x - x0) / h;
    double h00 = (1 + 2 * t) * (1 - t) * (1 - t), h10 = t * (1 - t) * (1 - t);
    double h01 = t * t * (3 - 2 * t), h11 = t * t * (t - 1);
    return h00 * e_[i - 1] + h10 * h * d_[i - 1] + h01 * e_[i] + h11 * h * d_[i];
}

double mean_square_error_term(int k, double t_upper, const MomentPolynomial& poly, double tol,
                              const EvalConfig& cfg) {
    if (k != 1 && k != 2) throw BadParams("mean_square_error_term: k must be 1 or 2");
    if (!(t_upper >= 10.0)) throw DomainError("mean_square_error_term: T must be >= 10");
    CumulativeMoment table(k, t_upper, tol, cfg);
    const int n_grid = 200;
    double lo = std::log(1.0), hi = std::log(t_upper);
    double prev_t = 1.0;
    double prev_g = std::pow(table.error_term(1.0, poly), 2);
    double acc = 0.0;
    for (int j = 1; j < n_grid; ++j) {
        double t = std::exp(lo + (hi - lo) * j / (n_grid - 1));
        double g = std::pow(table.error_term(t, poly), 2);
        acc += 0.5 * (g + prev_g) * (t - prev_t);
        prev_t = t;
        prev_g = g;
    }
    return acc;
}

}  // namespace zetalab
