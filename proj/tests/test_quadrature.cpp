#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "zetalab/quadrature.hpp"
#include "zetalab/zeta.hpp"

using namespace zetalab;

TEST_CASE("finite intervals, closed forms") {
    auto q = integrate_adaptive([](double x) { return cplx(x * x); }, 0.0, 1.0, 1e-12);
    CHECK(q.real() == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    q = integrate_adaptive([](double x) { return cplx(std::sin(x)); }, 0.0, kPi, 1e-12);
    CHECK(q.real() == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(q.panels_used >= 1);
}

TEST_CASE("degree <= 10 polynomials are exact") {
    for (int d = 0; d <= 10; ++d) {
        auto q = integrate_adaptive([d](double x) { return cplx(std::pow(x, d)); }, 0.0, 1.0,
                                    1e-12);
        CHECK(std::abs(q.real() - 1.0 / (d + 1)) < 1e-13);
    }
}

TEST_CASE("endpoint singularity with splitting") {
    QuadOptions opt;
    opt.split_endpoints = true;
    auto q = integrate_adaptive([](double x) { return cplx(1.0 / std::sqrt(x)); }, 0.0, 1.0,
                                1e-9, opt);
    CHECK(q.real() == doctest::Approx(2.0).epsilon(1e-7));
    q = integrate_adaptive([](double x) { return cplx(std::log(x)); }, 0.0, 1.0, 1e-9, opt);
    CHECK(q.real() == doctest::Approx(-1.0).epsilon(1e-7));
}

TEST_CASE("exponential tails") {
    auto q = integrate_exp_tail([](double) { return cplx(1.0); }, 0.0, 1.0, 1e-10);
    CHECK(q.real() == doctest::Approx(1.0).epsilon(1e-9));
    q = integrate_exp_tail([](double x) { return cplx(x); }, 0.0, 2.0, 1e-10, 1.0);
    CHECK(q.real() == doctest::Approx(0.25).epsilon(1e-9));
    q = integrate_exp_tail([](double x) { return cplx(std::cos(10.0 * x)); }, 0.0, 1.0, 1e-10);
    CHECK(q.real() == doctest::Approx(1.0 / 101.0).epsilon(1e-8));
}

TEST_CASE("algebraic tails") {
    auto q = integrate_algebraic_tail([](double) { return cplx(1.0); }, 1.0, 3.0, 0.0, 1e-10);
    CHECK(q.real() == doctest::Approx(0.5).epsilon(1e-9));
    q = integrate_algebraic_tail([](double x) { return cplx(std::log(x)); }, 1.0, 2.0, 0.1,
                                 1e-8);
    CHECK(q.real() == doctest::Approx(1.0).epsilon(1e-6));
    CHECK_THROWS_AS(
        integrate_algebraic_tail([](double) { return cplx(1.0); }, 1.0, 1.0, 0.0, 1e-8),
        DivergentTail);
}

TEST_CASE("tail truncation consistency") {
    // doubling the truncation point moves the value by less than the bound:
    // proxied by halving tol, which pushes the truncation outwards
    auto coarse = integrate_exp_tail([](double x) { return cplx(x * x); }, 0.0, 1.0, 1e-6, 2.0);
    auto fine = integrate_exp_tail([](double x) { return cplx(x * x); }, 0.0, 1.0, 1e-12, 2.0);
    CHECK(std::abs(coarse.value - fine.value) <= coarse.err_est + fine.err_est);
}

TEST_CASE("contour line integral: Mellin inversion of Gamma") {
    ContourSpec spec{2.0, -40.0, 40.0, 0.5};
    for (double x : {1.0, 2.0}) {
        auto q = contour_line_integral(
            [x](cplx w) { return gamma(w) * std::exp(-w * std::log(x)); }, spec, 1e-10);
        CHECK(std::abs(q.value - cplx(std::exp(-x))) < 1e-8);
    }
    // widening the window is a no-op at this tolerance
    ContourSpec wide{2.0, -60.0, 60.0, 0.5};
    auto a = contour_line_integral([](cplx w) { return gamma(w); }, spec, 1e-10);
    auto b = contour_line_integral([](cplx w) { return gamma(w); }, wide, 1e-10);
    CHECK(std::abs(a.value - b.value) < 1e-10);
}

TEST_CASE("freq hint keeps oscillatory integrals honest") {
    QuadOptions opt;
    opt.freq_hint = [](double) { return 40.0; };
    auto q = integrate_adaptive([](double x) { return cplx(std::cos(40.0 * x) * std::cos(40.0 * x)); },
                                0.0, kTwoPi, 1e-10, opt);
    CHECK(q.real() == doctest::Approx(kPi).epsilon(1e-9));
}

namespace {

struct Probe {
    double actual;
    double est;
};

// closed-form suite; the honesty criterion counts actual <= 3 err_est
std::vector<Probe> honesty_suite() {
    std::vector<Probe> out;
    auto fin = [&](Integrand f, double a, double b, double exact, QuadOptions opt = {}) {
        auto q = integrate_adaptive(f, a, b, 1e-9, opt);
        out.push_back({std::abs(q.real() - exact), q.err_est});
    };
    auto expt = [&](Integrand f, double a, double sg, double growth, double exact) {
        auto q = integrate_exp_tail(f, a, sg, 1e-9, growth);
        out.push_back({std::abs(q.real() - exact), q.err_est});
    };
    auto alg = [&](Integrand f, double a, double sg, double growth, double exact) {
        auto q = integrate_algebraic_tail(f, a, sg, growth, 1e-9);
        out.push_back({std::abs(q.real() - exact), q.err_est});
    };
    QuadOptions split;
    split.split_endpoints = true;

    fin([](double x) { return cplx(x * x); }, 0.0, 1.0, 1.0 / 3.0);
    fin([](double x) { return cplx(std::sin(x)); }, 0.0, kPi, 2.0);
    fin([](double x) { return cplx(std::exp(x)); }, 0.0, 1.0, std::exp(1.0) - 1.0);
    fin([](double x) { return cplx(1.0 / (1.0 + x * x)); }, 0.0, 1.0, kPi / 4.0);
    fin([](double x) { return cplx(std::log(x)); }, 0.0, 1.0, -1.0, split);
    fin([](double x) { return cplx(1.0 / std::sqrt(x)); }, 0.0, 1.0, 2.0, split);
    fin([](double x) { return cplx(std::sqrt(x)); }, 0.0, 1.0, 2.0 / 3.0);
    fin([](double x) { return cplx(1.0 / x); }, 1.0, 2.0, std::log(2.0));
    fin([](double x) { return cplx(std::sin(100.0 * x)); }, 0.0, 1.0,
        (1.0 - std::cos(100.0)) / 100.0);
    fin([](double x) { return cplx(std::cos(40.0 * x) * std::cos(40.0 * x)); }, 0.0, kTwoPi,
        kPi);
    fin([](double x) { return cplx(1.0 / (x * x + 1e-4)); }, -1.0, 1.0,
        200.0 * std::atan(100.0));
    fin([](double x) { return cplx(1.0 / std::sqrt(1.0 - x * x)); }, 0.0, 0.99,
        std::asin(0.99));
    expt([](double) { return cplx(1.0); }, 0.0, 1.0, 0.0, 1.0);
    expt([](double x) { return cplx(x); }, 0.0, 2.0, 1.0, 0.25);
    expt([](double x) { return cplx(std::cos(10.0 * x)); }, 0.0, 1.0, 0.0, 1.0 / 101.0);
    expt([](double x) { return cplx(x * x); }, 0.0, 1.0, 2.0, 2.0);
    expt([](double x) { return cplx(std::exp(-x * x + x)); }, 0.0, 1.0, 0.0, kSqrtPi / 2.0);
    expt([](double x) { return cplx(std::sin(x)); }, 0.0, 1.0, 0.0, 0.5);
    alg([](double) { return cplx(1.0); }, 1.0, 3.0, 0.0, 0.5);
    alg([](double x) { return cplx(std::log(x)); }, 1.0, 2.0, 0.1, 1.0);
    alg([](double x) { double l = std::log(x); return cplx(l * l); }, 1.0, 3.0, 0.2, 0.25);
    return out;
}

}  // namespace

TEST_CASE("error-estimate honesty on the closed-form suite") {
    auto probes = honesty_suite();
    CHECK(probes.size() >= 20);
    int bad = 0;
    for (const auto& p : probes)
        if (p.actual > 3.0 * p.est) ++bad;
    CHECK(bad * 20 <= static_cast<int>(probes.size()));  // >= 95% honest
}

TEST_CASE("ContourSpec validation") {
    ContourSpec bad{1.0, 2.0, 1.0, 1.0};
    CHECK_THROWS_AS(bad.validate(), BadParams);
}
