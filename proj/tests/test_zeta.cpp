#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "zetalab/zeta.hpp"

using namespace zetalab;

TEST_CASE("gamma exact values") {
    CHECK(std::abs(gamma(cplx(0.5)) - cplx(std::sqrt(kPi))) < 1e-12);
    CHECK(std::abs(gamma(cplx(5.0)) - cplx(24.0)) < 1e-10);
    CHECK(std::abs(gamma(cplx(1.0)) - cplx(1.0)) < 1e-13);
    CHECK_THROWS_AS(gamma(cplx(0.0)), PoleError);
    CHECK_THROWS_AS(gamma(cplx(-3.0)), PoleError);
}

TEST_CASE("gamma recurrence Gamma(s+1) = s Gamma(s)") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> re(0.2, 8.0), im(-20.0, 20.0);
    for (int i = 0; i < 30; ++i) {
        cplx s(re(rng), im(rng));
        cplx lhs = gamma(s + cplx(1.0));
        cplx rhs = s * gamma(s);
        CHECK(std::abs(lhs - rhs) <= 1e-11 * std::abs(lhs));
    }
}

TEST_CASE("chi fixed point and reflection") {
    CHECK(std::abs(chi(cplx(0.5)) - cplx(1.0)) < 1e-12);
    CHECK(std::abs(std::abs(chi(cplx(0.5, 5.0))) - 1.0) < 1e-12);
    cplx s(0.3, 2.0);
    CHECK(std::abs(chi(s) * chi(cplx(1.0) - s) - cplx(1.0)) < 1e-12);
}

TEST_CASE("zeta classical values") {
    CHECK(std::abs(zeta(cplx(2.0)) - cplx(kPi * kPi / 6.0)) < 1e-12);
    CHECK(std::abs(zeta(cplx(0.0)) - cplx(-0.5)) < 1e-12);
    CHECK(std::abs(zeta(cplx(4.0)) - cplx(std::pow(kPi, 4) / 90.0)) < 1e-12);
    CHECK_THROWS_AS(zeta(cplx(1.0)), PoleError);
}

TEST_CASE("functional equation residual on random strip points") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> re(0.01, 0.99), im(-50.0, 50.0);
    for (int i = 0; i < 100; ++i) {
        cplx s(re(rng), im(rng));
        cplx z = zeta(s);
        cplx r = chi(s) * zeta(cplx(1.0) - s);
        CHECK(std::abs(z - r) <= 1e-10 * (1.0 + std::abs(z)));
        CHECK(std::abs(zeta(std::conj(s)) - std::conj(z)) < 1e-12 * (1.0 + std::abs(z)));
    }
}

TEST_CASE("zeta_half_line hits the first zero") {
    CHECK(std::abs(zeta_half_line(14.134725)) < 1e-4);
}

TEST_CASE("Euler-Maclaurin and Riemann-Siegel agree across the seam") {
    EvalConfig em, rs;
    em.crossover_t = 100.0;  // force EM
    rs.crossover_t = 10.0;   // force RS
    for (int i = 0; i < 50; ++i) {
        double t = 35.0 + 10.0 * i / 49.0;
        CHECK(std::abs(zeta_half_line(t, em) - zeta_half_line(t, rs)) < 1e-8);
    }
}

TEST_CASE("zeta_half_line matches zeta on the line") {
    for (double t : {5.0, 20.0, 50.0, 200.0}) {
        cplx a = zeta_half_line(t);
        cplx b = zeta(cplx(0.5, t));
        CHECK(std::abs(a - b) < 1e-8);
    }
}

TEST_CASE("zeta_pow_modulus powers and positivity") {
    double v1 = zeta_pow_modulus(20.0, 1);
    double v2 = zeta_pow_modulus(20.0, 2);
    CHECK(v1 >= 0.0);
    CHECK(v2 == doctest::Approx(v1 * v1).epsilon(1e-12));
    CHECK(zeta_pow_modulus(14.134725, 2) < 1e-8);
    double m = std::abs(zeta_half_line(33.0));
    CHECK(zeta_pow_modulus(33.0, 3) == doctest::Approx(std::pow(m, 6)).epsilon(1e-10));
}

TEST_CASE("EvalConfig validation") {
    EvalConfig bad;
    bad.crossover_t = 5.0;
    CHECK_THROWS_AS(bad.validate(), BadParams);
    bad = EvalConfig{};
    bad.target_abs_tol = 0.0;
    CHECK_THROWS_AS(bad.validate(), BadParams);
}
