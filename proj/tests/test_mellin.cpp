#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "zetalab/mellin.hpp"

using namespace zetalab;

TEST_CASE("abscissae") {
    CHECK(mellin_abscissa(1) == 1.0);
    CHECK(mellin_abscissa(2) == 1.0);
    CHECK(mellin_abscissa(3) == doctest::Approx(1.25));
    CHECK(mellin_abscissa(4) == doctest::Approx(1.5));
}

TEST_CASE("direct transform shape and domain") {
    TransformValue a = mellin_transform(1, cplx(10.0), 1e-8);
    TransformValue b = mellin_transform(1, cplx(20.0), 1e-8);
    CHECK(a.value.real() > b.value.real());
    CHECK(b.value.real() > 0.0);
    CHECK_THROWS_AS(mellin_transform(1, cplx(1.1), 1e-6), DomainError);

    // doubled truncation agrees within err_est
    TransformValue c = mellin_transform(1, cplx(2.0), 1e-6, {}, 30000.0);
    TransformValue d = mellin_transform(1, cplx(2.0), 1e-6, {}, 60000.0);
    CHECK(std::abs(c.value - d.value) <= c.err_est + d.err_est);
}

TEST_CASE("conjugation and monotone decay") {
    cplx s(2.5, 1.5);
    TransformValue v = mellin_transform(1, s, 1e-7);
    TransformValue w = mellin_transform(1, std::conj(s), 1e-7);
    CHECK(std::abs(w.value - std::conj(v.value)) <= v.err_est + w.err_est + 1e-12);

    double prev = 1e300;
    for (double sg : {2.0, 4.0, 8.0, 14.0, 20.0}) {
        double z = mellin_transform(1, cplx(sg), 1e-8).value.real();
        CHECK(z > 0.0);
        CHECK(z < prev);
        prev = z;
    }
}

TEST_CASE("derivative consistency at s = 3") {
    double h = 1e-3;
    double zp = mellin_transform(1, cplx(3.0 + h), 1e-9).value.real();
    double zm = mellin_transform(1, cplx(3.0 - h), 1e-9).value.real();
    double fd = (zp - zm) / (2.0 * h);
    QuadOptions opt;
    opt.freq_hint = [](double x) { return zeta_freq(x); };
    auto q = integrate_algebraic_tail(
        [](double x) { return cplx(-std::log(x) * zeta_pow_modulus(x, 1)); }, 1.0, 3.0, 0.1,
        1e-7, opt);
    CHECK(std::abs(fd - q.real()) < 1e-4);
}

TEST_CASE("continued Z_1 against the direct transform") {
    const MomentPolynomial& poly = default_moment_poly(1);
    const ErrorTermTable& table = shared_error_table(1);
    TransformValue direct = mellin_transform(1, cplx(2.0), 1e-6);
    TransformValue cont = z1_continued(cplx(2.0), poly, 1e-6, table);
    CHECK(std::abs(direct.value - cont.value) <= direct.err_est + cont.err_est);
    CHECK_THROWS_AS(z1_continued(cplx(0.2), poly, 1e-6, table), DomainError);
    CHECK_THROWS_AS(z1_continued(cplx(1.001), poly, 1e-6, table), PoleError);
}

TEST_CASE("continued Z_2 against the direct transform") {
    const MomentPolynomial& poly = default_moment_poly(2);
    const ErrorTermTable& table = shared_error_table(2);
    TransformValue direct = mellin_transform(2, cplx(2.5), 1e-5);
    TransformValue cont = z2_continued(cplx(2.5), poly, 1e-6, table);
    CHECK(std::abs(direct.value - cont.value) <= direct.err_est + cont.err_est);
    CHECK_THROWS_AS(z2_continued(cplx(0.4), poly, 1e-6, table), DomainError);
}

TEST_CASE("principal part of Z_1 at s = 1") {
    const MomentPolynomial& poly = default_moment_poly(1);
    const ErrorTermTable& table = shared_error_table(1);
    double target = 2.0 * kEulerGamma - kLog2Pi;
    double prev_p = 1e300;
    for (double eps : {0.2, 0.1, 0.05}) {
        double z = z1_continued(cplx(1.0 + eps), poly, 1e-7, table).value.real();
        double p = eps * eps * z;
        double probe = (p - 1.0) / eps;
        CHECK(std::abs(p - 1.0) < std::abs(prev_p - 1.0) + 1e-12);
        CHECK(std::abs(probe - target) < 0.5);
        prev_p = p;
    }
}

TEST_CASE("square identity, general f") {
    IdentityReport r = square_identity_general([](double) { return cplx(1.0); }, 1.0, 2.0,
                                               cplx(3.0), 1e-10);
    CHECK(r.pass);
    CHECK(std::abs(r.lhs - cplx(9.0 / 64.0)) < 1e-12);
    CHECK(std::abs(r.rhs - cplx(9.0 / 64.0)) < 1e-12);

    // f(x) = x, s = 4: lhs = (int_1^2 x^{-3} dx)^2 = (3/8)^2
    IdentityReport r2 = square_identity_general([](double x) { return cplx(x); }, 1.0, 2.0,
                                                cplx(4.0), 1e-10);
    CHECK(r2.pass);
    CHECK(std::abs(r2.lhs - cplx(9.0 / 64.0)) < 1e-12);

    CHECK_THROWS_AS(square_identity_general([](double) { return cplx(1.0); }, 2.0, 1.0,
                                            cplx(3.0), 1e-8),
                    BadParams);
}

TEST_CASE("square identity for Z_1") {
    IdentityReport r = square_identity_report(1, cplx(4.0), 2000.0, 5e-3);
    CHECK(r.abs_err <= r.tol);
    CHECK(r.pass);
    CHECK_THROWS_AS(square_identity_report(1, cplx(1.05), 100.0, 1e-3), DomainError);
}

TEST_CASE("recurrence parameter validation") {
    ContourSpec spec{1.3, -20.0, 20.0, 1.0};
    CHECK_THROWS_AS(recurrence_rhs(2, 2, cplx(3.0), spec, 1e-2), BadParams);
    CHECK_THROWS_AS(recurrence_rhs(1, 1, cplx(3.0), spec, 1e-2), BadParams);
}

TEST_CASE("exp smoothed moment preconditions") {
    CHECK_THROWS_AS(exp_smoothed_moment(1, 1.0, 1e-3), DomainError);
    CHECK_THROWS_AS(exp_smoothed_moment(3, 50.0, 1e-3), BadParams);
}
