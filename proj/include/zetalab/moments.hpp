#pragma once

// Moments I_k(T) of |zeta| on the critical line, the main-term polynomials
// P_{k^2}, the error terms E_k(T) and their mean squares.  Coefficients the
// source material leaves unspecified are fitted and tagged as such.

#include <map>
#include <vector>

#include "zetalab/common.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

enum class Provenance { pinned, fitted };

struct MomentPolynomial {
    int k = 1;
    std::vector<double> coeffs;           // a_{0,k} ... a_{k^2,k}
    std::vector<Provenance> provenance;   // per coefficient

    double eval(double y) const;
    void validate() const;

    // a_{1,1} = 1 and a_{0,1} = 2 gamma - 1 - log 2 pi, both forced by the
    // residue structure of the continued Z_1 at s = 1.
    static MomentPolynomial k1_pinned();
};

struct MomentSample {
    double t = 0.0;
    double value = 0.0;
    double err_est = 0.0;
};

// Local oscillation frequency of |zeta(1/2+it)|^2 features (zero spacing),
// used as a quadrature panel cap.
double zeta_freq(double t);

// I_k(T) = int_0^T |zeta(1/2+it)|^{2k} dt, 1 <= k <= 4.
MomentSample moment_integral(int k, double t_upper, double tol, const EvalConfig& cfg = {});

// T * P_{k^2}(log T).
double main_term(const MomentPolynomial& poly, double t);

// E_k(T) = I_k(T) - T P_{k^2}(log T).
double error_term(int k, double t, const MomentPolynomial& poly, double tol,
                  const EvalConfig& cfg = {});

// Least-squares fit of I_k(T)/T against powers of log T; entries of `pinned`
// (index -> value) are held fixed and tagged pinned in the result.
MomentPolynomial fit_main_coeffs(int k, const std::vector<MomentSample>& samples,
                                 const std::map<int, double>& pinned);

// int_1^T E_k(t)^2 dt over a 200-point logarithmic grid (trend probe, not a
// sharp quadrature).  k must be 1 or 2; T >= 10.
double mean_square_error_term(int k, double t_upper, const MomentPolynomial& poly, double tol,
                              const EvalConfig& cfg = {});

// Prefix table of I_k over an oscillation-adapted panel grid; makes repeated
// I_k(T) / E_k(T) queries cheap (one partial panel each).
class CumulativeMoment {
  public:
    CumulativeMoment(int k, double t_max, double tol, const EvalConfig& cfg = {});

    double value(double t) const;    // I_k(t), 0 <= t <= t_max
    double err_at(double t) const;
    double error_term(double t, const MomentPolynomial& poly) const;
    double t_max() const { return t_max_; }
    int k() const { return k_; }

  private:
    int k_;
    double t_max_;
    EvalConfig cfg_;
    std::vector<double> knots_;
    std::vector<double> prefix_;
    std::vector<double> preferr_;
};

// Dense cubic-Hermite interpolant of E_k on [1, x_max].  Knot values come
// from a prefix integral over an oscillation-adapted grid; knot derivatives
// are exact (E_k'(x) = |zeta(1/2+ix)|^{2k} - P(log x) - P'(log x)).  Makes
// the continuation integrals over E_k cheap to evaluate repeatedly.
class ErrorTermTable {
  public:
    ErrorTermTable(int k, const MomentPolynomial& poly, double x_max,
                   const EvalConfig& cfg = {}, double points_per_feature = 8.0);

    double eval(double x) const;   // E_k(x), 1 <= x <= x_max
    double deriv(double x) const;  // exact E_k'(x)
    double x_max() const { return knots_.back(); }
    int k() const { return k_; }
    // measured interpolation error (midpoint probes at build time)
    double interp_err() const { return interp_err_; }

  private:
    int k_;
    MomentPolynomial poly_;
    EvalConfig cfg_;
    std::vector<double> knots_, e_, d_;
    double interp_err_ = 0.0;
};

}  // namespace zetalab
