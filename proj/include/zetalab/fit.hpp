#pragma once

// Small least-squares helpers shared by the fitted-constant machinery.

#include <vector>

namespace zetalab {

// Coefficients c[0..degree] of the least-squares polynomial
// sum_j c[j] x^j through (x_i, y_i).  Throws Underdetermined when there
// are fewer points than coefficients, SingularFit when the normal system
// is rank-deficient.
std::vector<double> poly_least_squares(const std::vector<double>& x,
                                       const std::vector<double>& y, int degree);

}  // namespace zetalab
