#include <doctest.h>

#include <hypsum/error.hpp>
#include <hypsum/residue.hpp>

#include "test_support.hpp"

using namespace hypsum;
using hypsum::test::q;

namespace
{

const Polynomial z = Polynomial::monomial(Rational(1), 1);

ErrorKind kind_of(auto &&fn)
{
    try {
        fn();
    } catch (const Error &e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::InvalidArgument;
}

} // namespace

TEST_CASE("build_f_k examples")
{
    const IdentityInstance inst = test::zero_shift_r2();
    SUBCASE("k = 0")
    {
        const FkFunction f0 = build_f_k(inst, 0);
        // (z - b + 1)_0 = 1 in every numerator factor.
        CHECK(f0.f.num() == Polynomial(q(1)));
        CHECK(f0.f.den() == z * Polynomial::linear_root(q(1, 2)));
        REQUIRE(f0.poles.size() == 2);
        CHECK(f0.poles[0].location == q(0));
        CHECK(f0.poles[1].location == q(1, 2));
    }
    SUBCASE("k = 1")
    {
        const FkFunction f1 = build_f_k(inst, 1);
        CHECK(f1.f.num() == Polynomial::linear_root(q(1, 3)) * Polynomial::linear_root(q(1, 4)));
        CHECK(f1.f.den()
              == Polynomial::linear_root(q(1)) * z * Polynomial::linear_root(q(3, 2)) * Polynomial::linear_root(q(1, 2)));
        CHECK(f1.poles.size() == 4);
    }
    SUBCASE("s = 0 has a unit numerator")
    {
        const IdentityInstance bessel{{q(0), q(1, 3)}, {}, {}, {0, 2}};
        for (int k = 0; k < 4; ++k) {
            CHECK(build_f_k(bessel, k).f.num() == Polynomial(q(1)));
        }
    }
    SUBCASE("negative denominator lengths move into the numerator")
    {
        const IdentityInstance inst2{{q(0), q(1, 2)}, {q(1, 3), q(1, 4)}, {3, 3}, {-3, 0}};
        const FkFunction fk = build_f_k(inst2, 0);
        // (z)_{-2} = 1 / ((z - 2)(z - 1)), so (z - 2)(z - 1) joins the numerator.
        CHECK(divmod(fk.f.num(), Polynomial::linear_root(q(2)) * Polynomial::linear_root(q(1))).second.is_zero());
        CHECK(fk.poles.size() == 1);
    }
    CHECK(kind_of([&] { (void)build_f_k(IdentityInstance{{q(0), q(1, 2)}, {q(1, 3), q(1, 4)}, {1, 2}, {0, 0}}, -2); })
          == ErrorKind::KBelowRange);
}

TEST_CASE("residue_at_simple_pole examples")
{
    const Rational c = q(5, 7);
    CHECK(residue_at_simple_pole(RationalFunction(Polynomial(q(1)), Polynomial::linear_root(c)), c) == q(1));
    const RationalFunction f(Polynomial(q(1)), z * Polynomial::linear_root(q(1)));
    CHECK(residue_at_simple_pole(f, q(0)) == q(-1));
    CHECK(residue_at_simple_pole(f, q(1)) == q(1));

    const IdentityInstance inst = test::zero_shift_r2();
    CHECK(residue_at_simple_pole(build_f_k(inst, 0).f, q(0)) == gamma_coeff(inst, 0, 0, 0));
    CHECK(gamma_coeff(inst, 0, 0, 0) == q(-2));

    const RationalFunction doubled(Polynomial(q(1)), Polynomial::linear_root(q(1)) * Polynomial::linear_root(q(1)));
    CHECK(kind_of([&] { (void)residue_at_simple_pole(doubled, q(1)); }) == ErrorKind::NotSimplePole);
    CHECK(kind_of([&] { (void)residue_at_simple_pole(f, q(3)); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("gamma_coeff index convention")
{
    for (const auto &inst : test::sample_instances(TheoremChoice::Any, 10, 3)) {
        const int m_min = validate(inst).m_min;
        for (int i = 0; i < inst.r(); ++i) {
            const int k = -m_min + 2;
            CHECK(gamma_coeff(inst, i, k, -1) == q(0));
            CHECK(gamma_coeff(inst, i, k, k + inst.n[i] + 1) == q(0));
        }
    }
}

TEST_CASE("sum_finite_residues and c_minus_one examples")
{
    const IdentityInstance inst = test::zero_shift_r2();
    const FkFunction f0 = build_f_k(inst, 0);
    // 1/(a_1 - a_2) + 1/(a_2 - a_1)
    CHECK(sum_finite_residues(f0) == q(0));
    CHECK(c_minus_one(f0) == q(0));
    CHECK(sum_finite_residues(f0) == c_minus_one(f0));

    // deg num <= deg den - 2 forces both to vanish.
    const IdentityInstance wide{{q(0), q(1, 2), q(1, 3)}, {q(1, 5), q(2, 5), q(3, 5)}, {0, 0, 0}, {1, 0, 0}};
    for (int k = 0; k < 4; ++k) {
        const FkFunction fk = build_f_k(wide, k);
        CHECK(fk.f.num().degree() - fk.f.den().degree() < -1);
        CHECK(sum_finite_residues(fk) == q(0));
        CHECK(c_minus_one(fk) == q(0));
    }

    // p = 0: C_{-1}(k) = 1.
    const IdentityInstance p0{{q(0), q(1, 2)}, {q(1, 3), q(1, 4)}, {1, 0}, {0, 0}};
    REQUIRE(validate(p0).p == 0);
    for (int k = 0; k < 6; ++k) {
        CHECK(c_minus_one(build_f_k(p0, k)) == q(1));
    }
}

TEST_CASE("residue theorem, pole/gamma agreement and degree bookkeeping on random instances")
{
    for (const auto &inst : test::sample_instances(TheoremChoice::Any, 12, 17)) {
        const DerivedQuantities d = validate(inst);
        for (int k = -d.m_min; k <= -d.m_min + 20; ++k) {
            const FkFunction fk = build_f_k(inst, k);
            CHECK(sum_finite_residues(fk) == c_minus_one(fk));
            CHECK(sum_finite_residues(fk) == gamma_double_sum(inst, k));
            for (const auto &pole : fk.poles) {
                CHECK(residue_at_simple_pole(fk.f, pole.location) == gamma_coeff(inst, pole.i, k, pole.j));
            }
            const int gap = d.M - d.N - inst.r() - (inst.r() - inst.s()) * k;
            CHECK(fk.f.num().degree() - fk.f.den().degree() == gap);
        }
    }
}

TEST_CASE("gamma closed form agrees with the series product form")
{
    for (const auto &inst : test::sample_instances(TheoremChoice::Any, 20, 23)) {
        const DerivedQuantities d = validate(inst);
        for (int k = -d.n_max; k <= -d.m_min + 4; ++k) {
            for (int i = 0; i < inst.r(); ++i) {
                for (int j = -1; j <= k + inst.n[i] + 1; ++j) {
                    try {
                        CHECK(gamma_coeff(inst, i, k, j) == gamma_coeff_from_series(inst, i, k, j));
                    } catch (const Error &e) {
                        // Only the closed form can hit 0 * infinity, and only below -m_min.
                        CHECK(e.kind() == ErrorKind::PochhammerPole);
                        CHECK(k < -d.m_min);
                    }
                }
            }
        }
    }
}
