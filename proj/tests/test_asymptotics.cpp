#include <doctest.h>

#include <hypsum/asymptotics.hpp>
#include <hypsum/error.hpp>
#include <hypsum/residue.hpp>

#include "test_support.hpp"

using namespace hypsum;
using hypsum::test::q;

TEST_CASE("bernoulli numbers")
{
    CHECK(bernoulli_number(0) == q(1));
    CHECK(bernoulli_number(1) == q(-1, 2));
    CHECK(bernoulli_number(2) == q(1, 6));
    CHECK(bernoulli_number(3) == q(0));
    CHECK(bernoulli_number(4) == q(-1, 30));
    CHECK(bernoulli_number(6) == q(1, 42));
    for (int j = 3; j < 20; j += 2) {
        CHECK(bernoulli_number(j) == q(0));
    }
    CHECK_THROWS_AS(bernoulli_number(-1), Error);
}

TEST_CASE("bernoulli polynomials")
{
    CHECK(bernoulli_poly(0) == Polynomial(q(1)));
    CHECK(bernoulli_poly(1) == Polynomial({q(-1, 2), q(1)}));
    CHECK(bernoulli_poly(2) == Polynomial({q(1, 6), q(-1), q(1)}));
    for (int n = 1; n <= 8; ++n) {
        const Polynomial B = bernoulli_poly(n);
        CHECK(B.degree() == n);
        CHECK(B.leading() == q(1));
        // B_n(x + 1) - B_n(x) = n x^{n-1}
        const Polynomial shifted = B.compose(Polynomial::affine(q(1), q(1)));
        CHECK(shifted - B == Polynomial::monomial(q(n), n - 1));
    }
}

TEST_CASE("Q_j for the reference instance")
{
    const IdentityInstance inst = test::zero_shift_r2();
    // By hand with B_2(x) = x^2 - x + 1/6: the k-coefficient is
    // 2 (sum a - sum b + r) = 23/6 and the constant is sum_i 2 a_i = 1.
    const KPolynomial Q1 = q_big_poly(inst, 1);
    CHECK(Q1.poly == Polynomial({q(1), q(23, 6)}));
    CHECK(q_small_poly(inst, 1).poly == Q1.poly * q(1, 2));
    CHECK(q_small_poly(inst, 0).poly == Polynomial(q(1)));
    CHECK_THROWS_AS(q_big_poly(inst, 0), Error);
    CHECK_THROWS_AS(q_big_poly(IdentityInstance{{q(0), q(1, 2)}, {q(1, 3)}, {0}, {0, 0}}, 1), Error);
}

TEST_CASE("degrees of Q_j and q_s on random instances")
{
    for (const auto &inst : test::sample_instances(TheoremChoice::One, 20, 31, 4)) {
        for (int j = 1; j <= 3; ++j) {
            const KPolynomial Q = q_big_poly(inst, j);
            CHECK(Q.degree() == j);
            // The k^{j+1} terms of the four Bernoulli compositions cancel.
            CHECK(Q.poly.coefficient(j + 1) == q(0));
        }
        CHECK(q_small_poly(inst, 1).degree() == 1);
        CHECK(q_small_poly(inst, 2).degree() == 2);
    }
}

TEST_CASE("lemma1_check examples")
{
    SUBCASE("p = -1")
    {
        const Lemma1Report r = lemma1_check(test::zero_shift_r2());
        CHECK(r.p == -1);
        CHECK(r.samples.size() == 3);
        for (const auto &s : r.samples) {
            CHECK(s.c_minus_one == q(0));
        }
    }
    SUBCASE("p = 0")
    {
        const Lemma1Report r = lemma1_check(IdentityInstance{{q(0), q(1, 2)}, {q(1, 3), q(1, 4)}, {1, 0}, {0, 0}});
        CHECK(r.p == 0);
        for (const auto &s : r.samples) {
            CHECK(s.c_minus_one == q(1));
        }
    }
    SUBCASE("p = 2")
    {
        const IdentityInstance inst{{q(0), q(1, 2)}, {q(1, 3), q(1, 4)}, {2, 1}, {0, 0}};
        const Lemma1Report r = lemma1_check(inst);
        CHECK(r.p == 2);
        CHECK(r.degree == 2);
        REQUIRE(r.samples.size() == 5);
        for (const auto &s : r.samples) {
            CHECK(s.c_minus_one == c_minus_one(build_f_k(inst, s.k)));
            CHECK(s.predicted == s.c_minus_one);
        }
    }
    CHECK_THROWS_AS(lemma1_check(IdentityInstance{{q(0), q(1, 2)}, {q(1, 3)}, {0}, {0, 0}}), Error);
}

TEST_CASE("the bare Q_j product does not reproduce C_{-1}")
{
    // q_2 from G_j = (-1)^{j+1} Q_j / (j (j + 1)) versus the same partition
    // sum applied to Q_j directly.
    const IdentityInstance inst{{q(0), q(1, 2)}, {q(1, 3), q(1, 4)}, {2, 1}, {0, 0}};
    const Polynomial Q1 = q_big_poly(inst, 1).poly;
    const Polynomial Q2 = q_big_poly(inst, 2).poly;
    const Polynomial bare = Q2 + Q1 * Q1 * q(1, 2);
    const Polynomial scaled = Q2 * q(-1, 6) + Q1 * Q1 * q(1, 8);
    CHECK(scaled == q_small_poly(inst, 2).poly);
    int mismatches = 0;
    for (int k = -1; k <= 3; ++k) {
        const Rational c = c_minus_one(build_f_k(inst, k));
        CHECK(scaled.evaluate(Rational(k)) == c);
        mismatches += bare.evaluate(Rational(k)) != c;
    }
    CHECK(mismatches > 0);
}

TEST_CASE("Bernoulli route on generated instances with p up to 3")
{
    int seen = 0;
    for (const auto &inst : test::sample_instances(TheoremChoice::One, 40, 47, 3)) {
        const int p = validate(inst).p;
        if (p > 3) {
            continue;
        }
        const Lemma1Report r = lemma1_check(inst);
        CHECK(static_cast<int>(r.samples.size()) == std::max(p + 3, 3));
        if (p >= 1) {
            CHECK(r.degree == p);
        }
        ++seen;
    }
    CHECK(seen > 10);
}
