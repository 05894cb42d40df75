#include "zetalab/fit.hpp"

#include <Eigen/Dense>

#include "zetalab/errors.hpp"

namespace zetalab {

std::vector<double> poly_least_squares(const std::vector<double>& x,
                                       const std::vector<double>& y, int degree) {
    if (degree < 0) throw BadParams("poly_least_squares: degree must be >= 0");
    if (x.size() != y.size()) throw BadParams("poly_least_squares: size mismatch");
    const long n = static_cast<long>(x.size());
    const long m = degree + 1;
    if (n < m) throw Underdetermined("poly_least_squares: fewer points than coefficients");
    Eigen::MatrixXd a(n, m);
    Eigen::VectorXd b(n);
    for (long i = 0; i < n; ++i) {
        double p = 1.0;
        for (long j = 0; j < m; ++j) {
            a(i, j) = p;
            p *= x[static_cast<size_t>(i)];
        }
        b(i) = y[static_cast<size_t>(i)];
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
    if (qr.rank() < m) throw SingularFit("poly_least_squares: rank-deficient design matrix");
    Eigen::VectorXd c = qr.solve(b);
    return {c.data(), c.data() + m};
}

}  // namespace zetalab
