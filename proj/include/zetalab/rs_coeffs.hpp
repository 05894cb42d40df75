#pragma once

// Tables generated by scripts/gen_rs_coeffs.py (see src/rs_coeffs.cpp).

namespace zetalab::detail {

inline constexpr int kRsNumCoeffs = 21;   // C_0 .. C_20
inline constexpr int kRsChebDegree = 40;  // Chebyshev degree per coefficient
inline constexpr int kLogTableMax = 512;

extern const double kRsCheb[kRsNumCoeffs][kRsChebDegree + 1];
extern const double kLogHi[kLogTableMax + 1];
extern const double kLogLo[kLogTableMax + 1];
extern const double kLog2PiHi;
extern const double kLog2PiLo;
extern const double kTwoPiHi;
extern const double kTwoPiLo;

}  // namespace zetalab::detail
