#pragma once

// The Laplace transform L_k(s) of |zeta(1/2+ix)|^{2k}, its small-sigma
// expansions (Kober main term, the L_2 asymptotic) and the explicit series
// representations of L_1 and L_2 (divisor sums, Bessel K_0).

#include <string>
#include <vector>

#include "zetalab/common.hpp"
#include "zetalab/quadrature.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

struct TransformValue {
    cplx value;
    double err_est = 0.0;
};

// d(n) and d_4(n) by sieve; cached on disk (binary, header "DIV1",
// n_max then both tables as 64-bit little-endian integers).
struct DivisorTable {
    long n_max = 0;
    std::vector<std::int64_t> d;   // d[n], index 0 unused
    std::vector<std::int64_t> d4;  // d4[n]

    static DivisorTable build(long n_max);
    static DivisorTable load_or_build(const std::string& cache_path, long n_max);
    void save(const std::string& path) const;
};

struct L2AsympConstants {
    double a;  // 1/(2 pi^2), pinned
    double b;  // pi^{-2} (2 log 2pi - 6 gamma + 24 zeta'(2) pi^{-2}), computed
    double c = 0.0, d = 0.0, e = 0.0;  // fitted
    bool cde_fitted = false;

    static L2AsympConstants pinned();
};

// zeta'(2) = -sum log(n)/n^2, by series with Euler-Maclaurin tail.
double zeta_prime_2();

// L_k(s) = int_0^inf |zeta(1/2+ix)|^{2k} e^{-sx} dx, Re s > 0, 1 <= k <= 3.
TransformValue laplace_transform(int k, cplx s, double tol, const EvalConfig& cfg = {});

// Main term of the Kober expansion of L_1, in the argument of L_1 itself:
// (gamma - log(2 pi sigma')) / (2 sin(sigma'/2)), 0 < sigma' < 1.
double kober_main(double sigma_prime);

// Explicit part of Atkinson's formula for L_1(s) in the strip 0 < Re s < pi
// (everything except the lambda_1 remainder); series truncated at n_max.
// tail_bound_out, when non-null, receives a rigorous truncation bound.
cplx atkinson_l1(cplx s, long n_max, const DivisorTable& table,
                 double* tail_bound_out = nullptr);

// Modified Bessel K_0(z), series for |z| <= 8, asymptotic beyond.
cplx bessel_k0(cplx z);

// Truncated series term of Atkinson's L_2 representation (excluding phi(s)):
// 4 pi e^{-s/2} sum_{n <= n_max} d_4(n) K_0(4 pi i sqrt(n) e^{-s/2}).
// The K_0 arguments lean into the right half plane only for Im s > 0; on the
// real axis |K_0| ~ n^{-1/4} and the partial sums merely fluctuate.
// tail_bound_out receives a rigorous dropped-tail bound where the terms
// decay and a measured partial-sum fluctuation estimate otherwise.
// Im s < 0 is rejected (the terms grow exponentially there).
cplx atkinson_l2_series(cplx s, long n_max, const DivisorTable& table,
                        double* tail_bound_out = nullptr);

// Main term of the L_2(sigma) asymptotic:
// (1/sigma) (A log^4(1/sigma) + B log^3 + C log^2 + D log + E).
double l2_asymptotic(double sigma, const L2AsympConstants& consts);

// Least-squares fit of C, D, E against samples of sigma * L_2(sigma) in
// powers of log(1/sigma), holding A and B fixed.
L2AsympConstants fit_l2_constants(const std::vector<double>& sigmas,
                                  const std::vector<double>& sigma_l2_values);

}  // namespace zetalab
