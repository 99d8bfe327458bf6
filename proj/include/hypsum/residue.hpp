#ifndef HYPSUM_RESIDUE_HPP
#define HYPSUM_RESIDUE_HPP

#include <vector>

#include <hypsum/hyper.hpp>
#include <hypsum/rational.hpp>
#include <hypsum/rational_function.hpp>

namespace hypsum
{

struct Pole {
    Rational location; // a_i + k - j
    int i = 0;
    int j = 0;
};

// f_k(z) = prod_j (z - b_j - k + 1)_{m_j + k} / prod_i (z - a_i - k)_{n_i + k + 1}
// in expanded form, with the finite poles enumerated.
struct FkFunction {
    int k = 0;
    RationalFunction f;
    std::vector<Pole> poles;
};

// Throws Error(KBelowRange) for k < -m_min.
FkFunction build_f_k(const IdentityInstance &inst, int k);

// Residue of f at a simple root z0 of its denominator. Throws
// Error(NotSimplePole) for a repeated root and Error(InvalidArgument) if z0
// is not a root at all.
Rational residue_at_simple_pole(const RationalFunction &f, const Rational &z0);

// Closed form of gamma^{k+n_i}_{i,j} (i is 0-based); zero for j < 0 or
// j > k + n_i. Throws Error(PochhammerPole) if the closed form is undefined.
Rational gamma_coeff(const IdentityInstance &inst, int i, int k, int j);

// Same quantity from the product of series coefficients that produced it:
// prefactor times the j-th and (k+n_i-j)-th hypergeometric coefficients,
// sign-adjusted to the closed form. Defined for every validated instance.
Rational gamma_coeff_from_series(const IdentityInstance &inst, int i, int k, int j);

// sum_i sum_j gamma^{k+n_i}_{i,j} via the closed form.
Rational gamma_double_sum(const IdentityInstance &inst, int k);

Rational sum_finite_residues(const FkFunction &fk);

// Coefficient of z^{-1} in the expansion of f_k at infinity.
Rational c_minus_one(const FkFunction &fk);

} // namespace hypsum

#endif
