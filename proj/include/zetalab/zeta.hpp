#pragma once

// Evaluation of Gamma(s), chi(s), zeta(s) and |zeta(1/2+it)|^{2k}.
//
// Two independent paths are available on the critical line: Euler-Maclaurin
// summation (used below cfg.crossover_t and for general complex s) and the
// Riemann-Siegel formula with configurable correction order (used above).
// Path agreement across the crossover is part of the test suite.

#include "zetalab/common.hpp"

namespace zetalab {

struct EvalConfig {
    double target_abs_tol = 1e-12;
    int euler_maclaurin_terms = 50;  // minimum number of direct-sum terms
    int rs_correction_order = 14;    // correction terms C_0..C_order
    double crossover_t = 40.0;       // EM below, RS above

    void validate() const {
        if (!(target_abs_tol > 0)) throw BadParams("EvalConfig: target_abs_tol must be > 0");
        if (crossover_t < 10.0) throw BadParams("EvalConfig: crossover_t must be >= 10");
        if (euler_maclaurin_terms < 1) throw BadParams("EvalConfig: euler_maclaurin_terms must be >= 1");
        if (rs_correction_order < 0) throw BadParams("EvalConfig: rs_correction_order must be >= 0");
    }
};

// log Gamma(z) (principal-ish branch; imaginary part is not guaranteed
// continuous across large |Im z|, callers only ever exponentiate it or take
// real part / differences).
cplx log_gamma(cplx z);

// Gamma(s).  Relative error <= 1e-12 for |s| <= 100.
// Throws PoleError at s = 0, -1, -2, ... (within 1e-14).
cplx gamma(cplx s);

// chi(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s), evaluated in log space.
cplx chi(cplx s);

// zeta(s) by Euler-Maclaurin for Re s > 0, reflected through chi for
// Re s <= 0.  Throws PoleError at s = 1.
cplx zeta(cplx s, const EvalConfig& cfg = {});

// Hardy Z(t); Riemann-Siegel main sum plus `order` correction terms
// (clamped to the generated table size).
double riemann_siegel_z(double t, int order);

// Riemann-Siegel theta(t), reduced accurately (asymptotic series with
// double-double leading term).
double rs_theta(double t);

// zeta(1/2 + it): Euler-Maclaurin for t < cfg.crossover_t, Riemann-Siegel
// above.  Requires t >= 0.
cplx zeta_half_line(double t, const EvalConfig& cfg = {});

// |zeta(1/2+it)|^{2k} for 1 <= k <= 4.
double zeta_pow_modulus(double t, int k, const EvalConfig& cfg = {});

}  // namespace zetalab
