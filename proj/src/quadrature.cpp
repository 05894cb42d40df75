#include "zetalab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace zetalab {
namespace {

// 15-point Kronrod / 7-point Gauss pair (QUADPACK dqk15 constants).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    cplx integral;
    double err;
    bool operator<(const Panel& other) const { return err < other.err; }
};

Panel gk15(const Integrand& f, double a, double b) {
    double c = 0.5 * (a + b);
    double h = 0.5 * (b - a);
    cplx fv[15];
    for (int j = 0; j < 7; ++j) {
        fv[j] = f(c - h * kXgk[j]);
        fv[14 - j] = f(c + h * kXgk[j]);
    }
    fv[7] = f(c);
    cplx resk = 0.0, resg = 0.0;
    double resabs = 0.0;
    for (int j = 0; j < 7; ++j) {
        resk += kWgk[j] * (fv[j] + fv[14 - j]);
        resabs += kWgk[j] * (std::abs(fv[j]) + std::abs(fv[14 - j]));
    }
    resk += kWgk[7] * fv[7];
    resabs += kWgk[7] * std::abs(fv[7]);
    for (int j = 0; j < 4; ++j) {
        // Gauss nodes are the odd-index Kronrod nodes
        if (j < 3)
            resg += kWg[j] * (fv[2 * j + 1] + fv[13 - 2 * j]);
        else
            resg += kWg[3] * fv[7];
    }
    cplx reskh = resk * 0.5;
    double resasc = kWgk[7] * std::abs(fv[7] - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(fv[j] - reskh) + std::abs(fv[14 - j] - reskh));
    resasc *= h;
    double err = std::abs(resk - resg) * h;
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    double round_err = 50.0 * 2.22e-16 * resabs * h;
    err = std::max(err, round_err);
    return {a, b, resk * h, err};
}

std::vector<double> initial_breakpoints(double a, double b, const QuadOptions& opt) {
    std::vector<double> pts;
    pts.push_back(a);
    if (opt.split_endpoints) {
        double len = b - a;
        for (int k = 40; k >= 2; --k) {
            double x = a + len * std::ldexp(1.0, -k);
            if (x > pts.back()) pts.push_back(x);
        }
    }
    if (opt.freq_hint) {
        double x = pts.back();
        while (x < b) {
            double w = opt.freq_hint(0.5 * (x + std::min(b, x + 1.0)));
            double step = (w > 0) ? kPi / w : (b - a);
            step = std::max(step, (b - a) * 1e-9);
            x = std::min(b, x + step);
            pts.push_back(x);
        }
    }
    if (opt.split_endpoints) {
        double len = b - a;
        std::vector<double> right;
        for (int k = 2; k <= 40; ++k) {
            double x = b - len * std::ldexp(1.0, -k);
            if (x > pts.back()) right.push_back(x);
        }
        for (double x : right) pts.push_back(x);
    }
    if (pts.back() < b) pts.push_back(b);
    return pts;
}

}  // namespace

QuadResult integrate_adaptive(const Integrand& f, double a, double b, double tol,
                              const QuadOptions& opt) {
    if (!(a < b)) throw BadParams("integrate_adaptive: requires a < b");
    if (!(tol > 0)) throw BadParams("integrate_adaptive: tol must be > 0");
    auto pts = initial_breakpoints(a, b, opt);
    std::priority_queue<Panel> heap;
    long panels = 0;
    double total_err = 0.0;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        Panel p = gk15(f, pts[i], pts[i + 1]);
        total_err += p.err;
        heap.push(p);
        ++panels;
    }
    while (total_err > tol && !heap.empty()) {
        Panel worst = heap.top();
        if (worst.err < tol / (4.0 * static_cast<double>(heap.size()))) break;
        heap.pop();
        if (panels + 2 > opt.max_panels)
            throw NoConvergence("integrate_adaptive: panel budget exhausted");
        double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) break;  // cannot refine further
        Panel left = gk15(f, worst.a, mid);
        Panel right = gk15(f, mid, worst.b);
        total_err += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
        panels += 2;
    }
    // deterministic summation: drain and sort by left endpoint
    std::vector<Panel> all;
    all.reserve(heap.size());
    while (!heap.empty()) {
        all.push_back(heap.top());
        heap.pop();
    }
    std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    cplx value = 0.0;
    double err = 0.0;
    for (const Panel& p : all) {
        value += p.integral;
        err += p.err;
    }
    return {value, err, std::max<long>(panels, 1)};
}

QuadResult integrate_exp_tail(const Integrand& f, double a, double sigma, double tol,
                              double growth, const QuadOptions& opt) {
    if (!(sigma > 0)) throw DomainError("integrate_exp_tail: sigma must be > 0");
    if (!(tol > 0)) throw BadParams("integrate_exp_tail: tol must be > 0");
    if (!std::isfinite(growth) || growth < 0)
        throw BadGrowthBound("integrate_exp_tail: growth exponent must be finite and >= 0");
    double x_star = a + (std::log(1.0 / tol) + 4.0 + growth) / sigma;
    double tail_bound = 0.0;
    for (int iter = 0;; ++iter) {
        // C from 8 log-spaced samples of |f| x^{-growth} below and at x_star
        double c_est = 0.0;
        double x0 = std::max(a, 1.0);
        for (int i = 0; i < 8; ++i) {
            double x = x0 * std::pow(std::max(x_star / x0, 1.0001), (i + 1) / 8.0);
            double ref = std::pow(std::max(x, 1.0), growth);
            c_est = std::max(c_est, std::abs(f(x)) / ref);
        }
        c_est *= 2.0;  // safety factor
        double denom = 1.0 - growth / (sigma * std::max(x_star, 1.0));
        if (denom <= 0.1) {
            x_star *= 2.0;
            continue;
        }
        tail_bound = c_est * std::pow(std::max(x_star, 1.0), growth) *
                     std::exp(-sigma * x_star) / (sigma * denom);
        if (tail_bound < tol / 2.0) break;
        if (iter > 60 || x_star > 1e9)
            throw BadGrowthBound("integrate_exp_tail: cannot bound the tail below tol/2");
        x_star *= 1.5;
    }
    auto weighted = [&](double x) { return f(x) * std::exp(-sigma * x); };
    QuadResult r = integrate_adaptive(weighted, a, x_star, tol / 2.0, opt);
    r.err_est += tail_bound;
    return r;
}

QuadResult integrate_algebraic_tail(const Integrand& f, double a, double sigma,
                                    double growth, double tol, const QuadOptions& opt) {
    if (!(a >= 1.0)) throw BadParams("integrate_algebraic_tail: requires a >= 1");
    if (!(sigma - growth > 1.0))
        throw DivergentTail("integrate_algebraic_tail: requires sigma - growth > 1");
    if (!(tol > 0)) throw BadParams("integrate_algebraic_tail: tol must be > 0");
    double x_star = std::max(2.0 * a, 16.0);
    double tail_bound = 0.0;
    for (int iter = 0;; ++iter) {
        // C from 8 log-spaced samples past the truncation candidate
        double c_est = 0.0;
        for (int i = 0; i < 8; ++i) {
            double x = x_star * std::pow(8.0, (i + 1) / 8.0);
            c_est = std::max(c_est, std::abs(f(x)) / std::pow(x, growth));
        }
        c_est *= 2.0;  // safety factor
        tail_bound = c_est * std::pow(x_star, growth + 1.0 - sigma) / (sigma - growth - 1.0);
        if (tail_bound < tol / 2.0) break;
        if (iter > 200 || x_star > 1e12)
            throw NoConvergence("integrate_algebraic_tail: cannot bound the tail below tol/2");
        x_star *= 2.0;
    }
    auto weighted = [&](double x) { return f(x) * std::pow(x, -sigma); };
    QuadResult r = integrate_adaptive(weighted, a, x_star, tol / 2.0, opt);
    r.err_est += tail_bound;
    return r;
}

QuadResult contour_line_integral(const std::function<cplx(cplx)>& F, const ContourSpec& spec,
                                 double tol, const QuadOptions& opt) {
    spec.validate();
    QuadOptions o = opt;
    if (!o.freq_hint) {
        double step = spec.max_step;
        o.freq_hint = [step](double) { return kPi / step; };
    }
    auto g = [&](double t) { return F(cplx(spec.c, t)); };
    QuadResult r = integrate_adaptive(g, spec.t_min, spec.t_max, tol * kTwoPi, o);
    r.value /= kTwoPi;
    r.err_est /= kTwoPi;
    return r;
}

}  // namespace zetalab
