#pragma once

#include <cmath>
#include <complex>

#include "zetalab/errors.hpp"

namespace zetalab {

using cplx = std::complex<double>;

// Well-known constants kept in one place.  euler_gamma is a literal;
// zeta'(2) is deliberately *not* listed here -- see laplace.hpp, it is
// computed by a series at startup.
inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 6.28318530717958647692528676655900577;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kLog2Pi = 1.83787706640934548356065947281123527;
inline constexpr double kSqrtPi = 1.77245385090551602729816748334114518;

inline bool is_finite(cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline cplx require_finite(cplx z, const char* what) {
    if (!is_finite(z)) throw OverflowError(std::string(what) + ": non-finite result");
    return z;
}

}  // namespace zetalab
