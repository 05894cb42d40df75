#pragma once

// The modified Mellin transform Z_k(s) = int_1^inf |zeta(1/2+ix)|^{2k} x^{-s} dx:
// direct evaluation in the absolute-convergence half plane, analytic
// continuation of Z_1 (to Re s > 1/4) and Z_2 (to Re s > 1/2) through the
// moment error terms, the contour recurrence, the square identity and the
// exponentially smoothed moment bridge.

#include <functional>

#include "zetalab/common.hpp"
#include "zetalab/laplace.hpp"  // TransformValue
#include "zetalab/moments.hpp"
#include "zetalab/quadrature.hpp"

namespace zetalab {

struct IdentityReport {
    cplx lhs;
    cplx rhs;
    double abs_err = 0.0;
    double tol = 0.0;
    bool pass = false;
};

// Abscissa of absolute convergence c(k); direct evaluation keeps a 1/4 margin.
double mellin_abscissa(int k);

// Shared main-term polynomial: k = 1 pinned exactly, k = 2 fitted once from
// cumulative fourth-moment samples with a_4 pinned at 1/(2 pi^2).
const MomentPolynomial& default_moment_poly(int k);

// Shared E_k interpolant on [1, 3000] built against default_moment_poly(k);
// constructed once per process (k in {1, 2}).
const ErrorTermTable& shared_error_table(int k);

// Z_k(s) for Re s > c(k) + 1/4, by quadrature over [1, X] with X grown until
// the integration-by-parts tail bound (cumulative integrand growth
// c(k) + eps) drops below tol/2 or x_cap is reached; the remaining bound is
// folded into err_est either way.
TransformValue mellin_transform(int k, cplx s, double tol, const EvalConfig& cfg = {},
                                double x_cap = 30000.0);

// Continuation of Z_1 to Re s > 1/4 via the error-term representation:
// rational part in 1/(s-1) from the main-term polynomial, plus
// -E_1(1) + s int_1^inf E_1(x) x^{-s-1} dx.  The overload taking an
// ErrorTermTable reuses a prebuilt interpolant (much cheaper when evaluating
// at many points); the other builds one to x = 3000 per call.
TransformValue z1_continued(cplx s, const MomentPolynomial& poly, double tol,
                            const EvalConfig& cfg = {});
TransformValue z1_continued(cplx s, const MomentPolynomial& poly, double tol,
                            const ErrorTermTable& table);

// Continuation of Z_2 to Re s > 1/2, same route with the k = 2 mean-square
// tail bound.
TransformValue z2_continued(cplx s, const MomentPolynomial& poly, double tol,
                            const EvalConfig& cfg = {});
TransformValue z2_continued(cplx s, const MomentPolynomial& poly, double tol,
                            const ErrorTermTable& table);

// Z_k(s) = (1/2 pi i) int_(c) Z_{k-r}(w) Z_r(1+s-w) dw, truncated to the given
// window and extended in 20-unit strips until three successive extensions each
// move the result by less than tol/4.  The dropped tail carries no rigorous
// bound; err_est includes a heuristic proxy for it.
TransformValue recurrence_rhs(int k, int r, cplx s, const ContourSpec& spec, double tol,
                              const EvalConfig& cfg = {});

// Z_k(s)^2 = 2 int_1^inf x^{-s} (int_{sqrt x}^x |zeta|^{2k}(u) |zeta|^{2k}(x/u)
// du/u) dx, checked with the outer integral truncated at x_max.
IdentityReport square_identity_report(int k, cplx s, double x_max, double tol,
                                      const EvalConfig& cfg = {});

// The same folding identity for an arbitrary integrable f on [a, b]:
// (int_a^b f(x) x^{-s} dx)^2 =
//   2 int_{a^2}^{b^2} x^{-s} int_{sqrt x}^{min(x/a, b)} f(u) f(x/u) du/u dx.
IdentityReport square_identity_general(const std::function<cplx(double)>& f, double a, double b,
                                       cplx s, double tol);

// int_1^inf e^{-x/T} |zeta(1/2+ix)|^{2k} dx both directly and as
// (1/2 pi i) int_(c) Gamma(s) T^s Z_k(s) ds, c = c(k) + 1/4.  k in {1, 2},
// T >= 10.
IdentityReport exp_smoothed_moment(int k, double T, double tol, const EvalConfig& cfg = {});

}  // namespace zetalab
