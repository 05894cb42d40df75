#pragma once

// Spectral-side objects attached to Maass wave forms: the gamma-factor
// kernel R(y), the spectral sum entering the L_2 error term, the smoothed
// local fourth moment I(T,G) and its explicit spectral formula, S(T,Delta)
// and the dyadic sums S_m.  Spectral data (kappa_j with pre-multiplied
// weights alpha_j H_j^m(1/2)) is loaded from a text file, never computed.

#include <string>
#include <vector>

#include "zetalab/common.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

struct SpectralEntry {
    double kappa = 0.0;   // spectral parameter kappa_j > 0
    double weight = 0.0;  // alpha_j H_j^m(1/2)
};

struct SpectralTable {
    std::vector<SpectralEntry> entries;  // ascending kappa
    int m = 3;                           // power of H_j encoded in the weights

    void validate() const;
};

// Text format: first line "SPEC m=<1|2|3>", then "<kappa> <weight>" per line;
// '#' lines are comments.  Entries are sorted on load.
SpectralTable load_spectral_data(const std::string& path);

// R(y) of the residue kernel, evaluated in log space (cosh(pi y) against the
// exponential decay of Gamma(2iy) overflows otherwise).  y != 0.
cplx big_r(double y);

// The truncated spectral term of the L_2 error expansion:
// s^{-1/2} sum_j w_j (s^{-i kappa_j} R(kappa_j) Gamma(1/2 + i kappa_j) +
//                     s^{+i kappa_j} R(-kappa_j) Gamma(1/2 - i kappa_j)).
// Requires 0 < |s| <= 1, |arg s| < pi/2 and an m = 3 table.
cplx spectral_sum_l2(cplx s, const SpectralTable& table);

// I(T,G) = (1/(sqrt(pi) G)) int |zeta(1/2 + iT + iu)|^4 e^{-(u/G)^2} du,
// truncated at |u| = G sqrt(log(1/tol) + 4).
double i_tg_direct(double T, double G, double tol, const EvalConfig& cfg = {});

// Spectral main term of I(T,G); valid for sqrt(T)/log^D T <= G <= T/log T
// (D = 1 here).  The O(log^{3D+9} T) remainder is not computed.
double i_tg_spectral(double T, double G, const SpectralTable& table);

// S_m(K; K', t) = sum_{K < kappa_j <= K'} w_j cos(kappa_j log(4 e t / kappa_j)),
// 1 <= K < K' <= 2K.
double s_m_sum(int m, double K, double K_prime, double t, const SpectralTable& table);

// S(T,Delta) = pi sqrt(T/2) sum_j w_j kappa_j^{-3/2} cos(kappa_j log(kappa_j/(4 e T)))
//              exp(-(Delta kappa_j / (2T))^2),
// truncated at kappa <= (T/Delta) log T; sqrt(T) <= Delta <= T^0.99.  When
// excluded_bound_out is non-null it receives a bound on the dropped entries.
double s_t_delta(double T, double Delta, const SpectralTable& table, double tol,
                 double* excluded_bound_out = nullptr);

}  // namespace zetalab
