#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "zetalab/laplace.hpp"
#include "zetalab/moments.hpp"
#include "zetalab/quadrature.hpp"

using namespace zetalab;

namespace {

// K_0(z) = int_0^inf e^{-z cosh t} dt, Re z > 0: an oracle independent of the
// series/asymptotic split inside bessel_k0
cplx k0_integral(cplx z) {
    auto q = integrate_adaptive(
        [z](double t) {
            cplx e = -z * std::cosh(t);
            return e.real() < -700.0 ? cplx(0.0) : std::exp(e);
        },
        0.0, 30.0, 1e-12);
    return q.value;
}

}  // namespace

TEST_CASE("divisor tables are multiplicative and correct at small n") {
    DivisorTable t = DivisorTable::build(100);
    CHECK(t.d[1] == 1);
    CHECK(t.d4[1] == 1);
    CHECK(t.d[2] == 2);
    CHECK(t.d[6] == t.d[2] * t.d[3]);
    CHECK(t.d4[2] == 4);
    CHECK(t.d4[4] == 10);
    CHECK(t.d4[6] == t.d4[2] * t.d4[3]);
    CHECK(t.d[36] == 9);
}

TEST_CASE("divisor cache roundtrip") {
    auto path = (std::filesystem::temp_directory_path() / "zl_div_test.bin").string();
    std::filesystem::remove(path);
    DivisorTable a = DivisorTable::load_or_build(path, 500);
    CHECK(std::filesystem::exists(path));
    DivisorTable b = DivisorTable::load_or_build(path, 500);
    CHECK(a.d == b.d);
    CHECK(a.d4 == b.d4);
    std::filesystem::remove(path);
}

TEST_CASE("laplace_transform basic shape") {
    TransformValue a = laplace_transform(1, cplx(1.0), 1e-8);
    TransformValue b = laplace_transform(1, cplx(2.0), 1e-8);
    CHECK(a.value.real() > b.value.real());
    CHECK(b.value.real() > 0.0);
    CHECK_THROWS_AS(laplace_transform(1, cplx(-0.5), 1e-6), DomainError);

    cplx s(1.0, 1.0);
    TransformValue v = laplace_transform(1, s, 1e-8);
    TransformValue w = laplace_transform(1, std::conj(s), 1e-8);
    CHECK(std::abs(w.value - std::conj(v.value)) <= v.err_est + w.err_est + 1e-10);

    // refined run agrees within the coarser err_est
    TransformValue fine = laplace_transform(1, cplx(1.0), 5e-9);
    CHECK(std::abs(a.value - fine.value) <= a.err_est + fine.err_est);
}

TEST_CASE("laplace monotone decreasing on a real grid") {
    double prev = 1e300;
    for (double sg : {0.2, 0.4, 0.8, 1.6, 3.2}) {
        double v = laplace_transform(1, cplx(sg), 1e-7).value.real();
        CHECK(v > 0.0);
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("kober main term") {
    double zero_arg = std::exp(kEulerGamma) / kTwoPi;
    CHECK(std::abs(kober_main(zero_arg)) < 1e-12);
    CHECK_THROWS_AS(kober_main(2.0), DomainError);
    CHECK_THROWS_AS(kober_main(0.0), DomainError);
}

TEST_CASE("bessel_k0 against the integral representation") {
    CHECK(std::abs(bessel_k0(cplx(1.0)) - cplx(0.421024438240708333)) < 1e-10);
    for (double x : {0.5, 1.0, 6.0, 8.0, 10.0, 20.0}) {  // spans the series/asymptotic seam
        cplx ref = k0_integral(cplx(x));
        CHECK(std::abs(bessel_k0(cplx(x)) - ref) <= 1e-9 * std::abs(ref));
    }
    cplx z(5.0, 3.0);
    CHECK(std::abs(bessel_k0(z) - k0_integral(z)) <= 1e-8 * std::abs(k0_integral(z)));
    // leading asymptotic
    double ratio = std::abs(bessel_k0(cplx(30.0))) /
                   (std::sqrt(kPi / 60.0) * std::exp(-30.0));
    CHECK(ratio == doctest::Approx(1.0).epsilon(0.01));
    CHECK_THROWS_AS(bessel_k0(cplx(0.0)), DomainError);
}

TEST_CASE("atkinson L1 explicit part") {
    DivisorTable table = DivisorTable::build(20000);
    cplx s(0.5, 0.2);
    double tail_small = 0.0, tail_big = 0.0;
    cplx a = atkinson_l1(s, 1000, table, &tail_small);
    cplx b = atkinson_l1(s, 10000, table, &tail_big);
    CHECK(std::abs(a - b) <= tail_small + tail_big);

    // lambda_1(s) << (|s|+1)^{-1}; frozen constant 5
    TransformValue l = laplace_transform(1, s, 1e-6);
    CHECK(std::abs(l.value - b) <= 5.0 / (std::abs(s) + 1.0));

    CHECK_THROWS_AS(atkinson_l1(cplx(3.5), 100, table), DomainError);
    CHECK_THROWS_AS(atkinson_l1(s, 100000, table), TableTooSmall);
}

TEST_CASE("atkinson L2 series") {
    DivisorTable table = DivisorTable::build(20000);
    cplx s(0.8, 0.25);
    double tail_a = 0.0, tail_b = 0.0;
    cplx a = atkinson_l2_series(s, 5000, table, &tail_a);
    cplx b = atkinson_l2_series(s, 10000, table, &tail_b);
    CHECK(std::abs(a - b) <= tail_a + tail_b);
    CHECK_THROWS_AS(atkinson_l2_series(cplx(0.8, -0.1), 100, table), DomainError);
}

TEST_CASE("zeta_prime_2 series value") {
    CHECK(std::abs(zeta_prime_2() - (-0.93754825431584375370)) < 1e-10);
}

TEST_CASE("l2 asymptotic constants") {
    L2AsympConstants c = L2AsympConstants::pinned();
    CHECK(c.a == doctest::Approx(1.0 / (2.0 * kPi * kPi)).epsilon(1e-15));
    double zp2 = zeta_prime_2();
    double b_ref = (2.0 * kLog2Pi - 6.0 * kEulerGamma + 24.0 * zp2 / (kPi * kPi)) / (kPi * kPi);
    CHECK(c.b == doctest::Approx(b_ref).epsilon(1e-12));

    L2AsympConstants bare = c;
    bare.c = bare.d = bare.e = 0.0;
    double sg = std::exp(-1.0);
    CHECK(l2_asymptotic(sg, bare) ==
          doctest::Approx(std::exp(1.0) * (bare.a + bare.b)).epsilon(1e-12));
    CHECK_THROWS_AS(l2_asymptotic(1.5, c), DomainError);
}

TEST_CASE("fit_l2_constants recovers synthetic coefficients") {
    L2AsympConstants truth = L2AsympConstants::pinned();
    truth.c = 0.7;
    truth.d = -2.1;
    truth.e = 5.3;
    std::vector<double> sigmas, vals;
    for (double sg : {0.05, 0.03, 0.02, 0.01, 0.006, 0.004, 0.003, 0.002}) {
        sigmas.push_back(sg);
        vals.push_back(sg * l2_asymptotic(sg, truth));
    }
    L2AsympConstants fit = fit_l2_constants(sigmas, vals);
    CHECK(fit.cde_fitted);
    CHECK(fit.c == doctest::Approx(truth.c).epsilon(1e-8));
    CHECK(fit.d == doctest::Approx(truth.d).epsilon(1e-8));
    CHECK(fit.e == doctest::Approx(truth.e).epsilon(1e-8));
}

TEST_CASE("trivial bound I_1(T) <= e L_1(1/T)") {
    for (double T : {20.0, 50.0}) {
        double lhs = moment_integral(1, T, 1e-6).value;
        double rhs = std::exp(1.0) * laplace_transform(1, cplx(1.0 / T), 1e-6).value.real();
        CHECK(lhs <= rhs);
    }
}
