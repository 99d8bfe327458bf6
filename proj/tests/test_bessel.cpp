#include <doctest.h>

#include <cmath>
#include <numbers>

#include <hypsum/bessel.hpp>
#include <hypsum/error.hpp>

#include "test_support.hpp"

using namespace hypsum;
using hypsum::test::q;

TEST_CASE("0F1 series reproduces closed-form half-integer Bessel functions")
{
    for (long double x : {0.5L, 1.0L, 2.0L, 3.0L}) {
        const long double j_half = std::sqrt(2.0L / (std::numbers::pi_v<long double> * x)) * std::sin(x);
        const long double j_minus_half = std::sqrt(2.0L / (std::numbers::pi_v<long double> * x)) * std::cos(x);
        CHECK(std::fabs(bessel_j_series(0.5L, x, 30) - j_half) < 1e-15L);
        CHECK(std::fabs(bessel_j_series(-0.5L, x, 30) - j_minus_half) < 1e-15L);
    }
}

TEST_CASE("m = 0 vanishes identically")
{
    const BesselReport r = bessel_demo(q(1, 3), 0, 30, {0.5L, 1.0L, 2.0L}, 1e-10L);
    for (const auto &s : r.samples) {
        CHECK(s.scaled == 0.0L);
    }
    CHECK(r.exact.passed());
    CHECK(r.exact.beta.empty());
}

TEST_CASE("nu = 1/3, m = 1: x * lhs is constant")
{
    const BesselReport r = bessel_demo(q(1, 3), 1, 30, {0.5L, 1.0L, 1.5L, 2.0L}, 1e-10L);
    CHECK(r.degree_bound == 0);
    for (const auto &s : r.samples) {
        CHECK(std::fabs(s.scaled - r.samples.front().scaled) < 1e-10L * r.scale);
    }
    CHECK(r.passed());
    // (-1) J_{-nu} J_{nu+1} - J_nu J_{-nu-1} = 2 sin(nu pi) / (pi x) in magnitude.
    CHECK(std::fabs(std::fabs(r.samples.front().scaled) - 2.0L * std::sin(std::numbers::pi_v<long double> / 3) / std::numbers::pi_v<long double>) < 1e-12L);
}

TEST_CASE("nu = 1/4, m = 3: x^3 * lhs is linear in x^2")
{
    const BesselReport r = bessel_demo(q(1, 4), 3, 30, {0.5L, 1.0L, 1.5L, 2.0L, 2.5L, 3.0L}, 1e-10L);
    CHECK(r.degree_bound == 1);
    CHECK(r.passed());
    CHECK(r.exact.derived.theorem == Theorem::Two);
    CHECK(r.exact.beta.support_low == -3);
}

TEST_CASE("bessel_demo errors")
{
    // A 2-term series is far too short at x = 3.
    CHECK_THROWS_AS(bessel_demo(q(1, 4), 3, 2, {0.5L, 1.0L, 1.5L, 2.0L, 2.5L, 3.0L}, 1e-10L), Error);
    try {
        (void)bessel_demo(q(1, 4), 3, 2, {0.5L, 1.0L, 1.5L, 2.0L, 2.5L, 3.0L}, 1e-10L);
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::NumericResidualExceeded);
    }
    CHECK_THROWS_AS(bessel_demo(q(1), 1, 30, {1.0L, 2.0L}, 1e-10L), Error);
    CHECK_THROWS_AS(bessel_demo(q(1, 3), 1, 30, {-1.0L, 2.0L}, 1e-10L), Error);
    CHECK_THROWS_AS(bessel_demo(q(1, 3), 3, 30, {1.0L, 2.0L}, 1e-10L), Error);
    CHECK_THROWS_AS(bessel_demo(q(1, 3), 1, 0, {1.0L, 2.0L}, 1e-10L), Error);
}
