#!/usr/bin/env python3
"""Generate Chebyshev tables for the Riemann-Siegel correction terms.

The remainder of the Riemann-Siegel formula at s = 1/2 + it,

    Z(t) = 2 sum_{n<=N} n^{-1/2} cos(theta(t) - t log n)
           + (-1)^{N-1} a^{-1/2} sum_{j>=0} C_j(p) a^{-j},

with a = sqrt(t/(2*pi)), N = floor(a), p = 1 - 2*(a - N), involves the
coefficient functions C_j(p).  Instead of transcribing their closed forms
(derivatives of an entire function with awkward rational prefactors), we
extract them numerically: for a fixed p the remainder is a power series in
1/a, so evaluating Z(t) at many integers N with the same fractional part of a
and solving the resulting Vandermonde system recovers C_j(p) to high
precision.  mpmath's siegelz/siegeltheta provide the high-precision truth.

Each C_j is then fitted by a Chebyshev series on p in [-1, 1] and the tables
are emitted as C++ source (src/rs_coeffs.cpp).  The script also emits a
double-double table of log(n) used for accurate phase reduction at large t,
and validates the final double-precision reconstruction against mpmath.

Usage: python3 scripts/gen_rs_coeffs.py [output.cpp]
"""

import sys
import time
import math
from mpmath import mp, mpf, cos, log, sqrt, pi, siegelz, siegeltheta, fsum, matrix, lu_solve

mp.dps = 120

N_NODES = [17, 22, 29, 38, 50, 65, 85, 111, 145, 190, 250, 330,
           440, 580, 770, 1020, 1350, 1800, 2400, 3200, 4300, 5800, 7700]
N_COEFFS = 21          # C_0 .. C_20
CHEB_M = 40            # Lobatto grid / series degree
LOG_TABLE_MAX = 512


def remainder(N, p):
    a = mpf(N) + (1 - p) / 2
    t = 2 * pi * a * a
    Z = siegelz(t)
    th = siegeltheta(t)
    s = fsum(cos(th - t * log(n)) / sqrt(n) for n in range(1, N + 1))
    return a, (Z - 2 * s) * (-1) ** (N - 1) * sqrt(a)


def extract_coeffs(p):
    rows = [remainder(N, p) for N in N_NODES]
    A = matrix(len(rows), N_COEFFS)
    b = matrix(len(rows), 1)
    for i, (a, r) in enumerate(rows):
        for j in range(N_COEFFS):
            A[i, j] = a ** (-j)
        b[i] = r
    At = A.T
    return lu_solve(At * A, At * b)


def cheb_fit(values):
    # values on Lobatto grid p_i = cos(pi*i/M), i = 0..M
    M = CHEB_M
    coeffs = []
    for k in range(M + 1):
        s = mpf(0)
        for i in range(M + 1):
            w = mpf(1) if 0 < i < M else mpf('0.5')
            s += w * values[i] * cos(pi * k * i / M)
        c = 2 * s / M
        if k == 0 or k == M:
            c /= 2
        coeffs.append(c)
    return coeffs


def cheb_eval(coeffs, x):
    b1 = b2 = mpf(0)
    for c in reversed(coeffs[1:]):
        b1, b2 = 2 * x * b1 - b2 + c, b1
    return x * b1 - b2 + coeffs[0]


def dd_split(x):
    hi = float(x)
    lo = float(x - mpf(hi))
    return hi, lo


def main():
    out_path = sys.argv[1] if len(sys.argv) > 1 else 'src/rs_coeffs.cpp'
    t0 = time.time()
    M = CHEB_M
    grid = [cos(pi * i / M) for i in range(M + 1)]

    print('extracting C_j on %d Chebyshev nodes ...' % (M + 1))
    per_node = []
    for i, p in enumerate(grid):
        per_node.append(extract_coeffs(p))
        print('  node %d/%d  (%.0fs)' % (i + 1, M + 1, time.time() - t0))

    cheb = []
    for j in range(N_COEFFS):
        cheb.append(cheb_fit([per_node[i][j] for i in range(M + 1)]))

    # sanity: off-grid extraction vs chebyshev reconstruction
    print('validating coefficient fits off-grid ...')
    worst = mpf(0)
    for p in [mpf('0.123'), mpf('-0.777'), mpf('0.95')]:
        direct = extract_coeffs(p)
        for j in range(N_COEFFS):
            err = abs(cheb_eval(cheb[j], p) - direct[j])
            worst = max(worst, err)
    print('  max |cheb - direct| = %s' % mp.nstr(worst, 3))

    # end-to-end double-precision simulation of the C++ evaluator
    print('validating double-precision reconstruction ...')
    chebf = [[float(c) for c in row] for row in cheb]

    def z_double(t):
        a = math.sqrt(t / (2 * math.pi))
        N = int(a)
        p = 1 - 2 * (a - N)
        th = float(siegeltheta(t))
        s = 0.0
        for n in range(1, N + 1):
            s += math.cos(math.fmod(th - t * math.log(n), 2 * math.pi)) / math.sqrt(n)
        corr = 0.0
        for j in range(N_COEFFS):
            b1 = b2 = 0.0
            for c in reversed(chebf[j][1:]):
                b1, b2 = 2 * p * b1 - b2 + c, b1
            corr += (p * b1 - b2 + chebf[j][0]) * a ** (-j)
        return 2 * s + (-1) ** (N - 1) * corr / math.sqrt(a)

    worst_t, worst_err = None, 0.0
    for k in range(120):
        t = 30.0 + 1970.0 * ((k * 0.61803398875) % 1.0)
        err = abs(z_double(t) - float(siegelz(t)))
        if err > worst_err:
            worst_err, worst_t = err, t
    print('  max |Z_double - Z| on t in [30,2000]: %.3e at t=%.3f' % (worst_err, worst_t))
    for t in [35.0, 40.0, 45.0, 1000.0, 12345.678, 100000.25]:
        print('  t=%-12g err=%.3e' % (t, abs(z_double(t) - float(siegelz(t)))))

    lines = []
    lines.append('// Generated by scripts/gen_rs_coeffs.py -- do not edit by hand.')
    lines.append('//')
    lines.append('// Chebyshev tables (on p in [-1,1]) for the Riemann-Siegel correction')
    lines.append('// coefficients C_0..C_%d, plus a double-double log(n) table used for' % (N_COEFFS - 1))
    lines.append('// phase reduction in the main sum.')
    lines.append('')
    lines.append('#include "zetalab/rs_coeffs.hpp"')
    lines.append('')
    lines.append('namespace zetalab::detail {')
    lines.append('')
    lines.append('const double kRsCheb[%d][%d] = {' % (N_COEFFS, M + 1))
    for j in range(N_COEFFS):
        lines.append('  {  // C_%d' % j)
        row = ['%.17e' % float(c) for c in cheb[j]]
        for i in range(0, len(row), 4):
            lines.append('    ' + ', '.join(row[i:i + 4]) + ',')
        lines.append('  },')
    lines.append('};')
    lines.append('')
    hi_rows, lo_rows = [], []
    for n in range(LOG_TABLE_MAX + 1):
        if n < 2:
            hi, lo = 0.0, 0.0
        else:
            hi, lo = dd_split(log(mpf(n)))
        hi_rows.append('%.17e' % hi)
        lo_rows.append('%.17e' % lo)
    lines.append('const double kLogHi[%d] = {' % (LOG_TABLE_MAX + 1))
    for i in range(0, len(hi_rows), 4):
        lines.append('  ' + ', '.join(hi_rows[i:i + 4]) + ',')
    lines.append('};')
    lines.append('const double kLogLo[%d] = {' % (LOG_TABLE_MAX + 1))
    for i in range(0, len(lo_rows), 4):
        lines.append('  ' + ', '.join(lo_rows[i:i + 4]) + ',')
    lines.append('};')
    lines.append('')
    h2, l2 = dd_split(log(2 * pi))
    lines.append('const double kLog2PiHi = %.17e;' % h2)
    lines.append('const double kLog2PiLo = %.17e;' % l2)
    h2, l2 = dd_split(2 * pi)
    lines.append('const double kTwoPiHi = %.17e;' % h2)
    lines.append('const double kTwoPiLo = %.17e;' % l2)
    lines.append('')
    lines.append('}  // namespace zetalab::detail')
    lines.append('')
    with open(out_path, 'w') as f:
        f.write('\n'.join(lines))
    print('wrote %s  (%.0fs total)' % (out_path, time.time() - t0))


if __name__ == '__main__':
    main()
