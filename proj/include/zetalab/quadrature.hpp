#pragma once

// Adaptive Gauss-Kronrod (15/7) integration for finite intervals,
// exponentially and algebraically damped tails, and vertical-line contour
// integrals.  Every result carries an error estimate; tail truncation
// bounds are folded into err_est.

#include <functional>

#include "zetalab/common.hpp"

namespace zetalab {

struct QuadResult {
    cplx value;
    double err_est = 0.0;
    long panels_used = 0;

    double real() const { return value.real(); }
};

struct ContourSpec {
    double c;       // abscissa of the line Re w = c
    double t_min;
    double t_max;
    double max_step = 1.0;

    void validate() const {
        if (!(t_min < t_max)) throw BadParams("ContourSpec: t_min must be < t_max");
        if (!(max_step > 0)) throw BadParams("ContourSpec: max_step must be > 0");
    }
};

using Integrand = std::function<cplx(double)>;

struct QuadOptions {
    // Panels are capped at pi / freq_hint(x) when set (oscillation control).
    std::function<double(double)> freq_hint;
    long max_panels = 1000000;
    // Geometric pre-splitting towards the endpoints (integrable endpoint
    // singularities flagged by the caller).
    bool split_endpoints = false;
};

QuadResult integrate_adaptive(const Integrand& f, double a, double b, double tol,
                              const QuadOptions& opt = {});

// int_a^inf f(x) e^{-sigma x} dx; |f| <= C x^growth with C estimated by
// sampling.  Truncates where the tail bound drops below tol/2.
QuadResult integrate_exp_tail(const Integrand& f, double a, double sigma, double tol,
                              double growth = 0.0, const QuadOptions& opt = {});

// int_a^inf f(x) x^{-sigma} dx; requires sigma - growth > 1.
QuadResult integrate_algebraic_tail(const Integrand& f, double a, double sigma,
                                    double growth, double tol, const QuadOptions& opt = {});

// (1/(2 pi i)) int F(c + it) i dt over [t_min, t_max].
QuadResult contour_line_integral(const std::function<cplx(cplx)>& F, const ContourSpec& spec,
                                 double tol, const QuadOptions& opt = {});

}  // namespace zetalab
