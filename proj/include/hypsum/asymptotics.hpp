#ifndef HYPSUM_ASYMPTOTICS_HPP
#define HYPSUM_ASYMPTOTICS_HPP

#include <vector>

#include <hypsum/hyper.hpp>
#include <hypsum/polynomial.hpp>
#include <hypsum/rational.hpp>

namespace hypsum
{

// A polynomial in the shift variable k.
struct KPolynomial {
    Polynomial poly;

    int degree() const
    {
        return poly.degree();
    }
    Rational operator()(int k) const
    {
        return poly.evaluate(Rational(k));
    }
};

// B_0 .. B_n with B_1 = -1/2.
std::vector<Rational> bernoulli_numbers(int n);
Rational bernoulli_number(int j);

// Monic B_n(x) = sum_l C(n, l) B_{n-l} x^l.
Polynomial bernoulli_poly(int n);

// Q_j(k) = sum_i [B_{j+1}(-a_i - k) - B_{j+1}(1 - b_i - k)
//                 + B_{j+1}(1 - b_i + m_i) - B_{j+1}(1 - a_i + n_i)].
// Requires s == r and j >= 1.
KPolynomial q_big_poly(const IdentityInstance &inst, int j);

// Coefficient of z^{-s} in z^{1-p} f_k(z) as z -> infinity: the exponential of
// sum_j G_j z^{-j}, G_j = (-1)^{j+1} Q_j(k) / (j (j + 1)), expanded through
// ordered compositions of s.
KPolynomial q_small_poly(const IdentityInstance &inst, int s_index);

struct Lemma1Sample {
    int k = 0;
    Rational c_minus_one; // residue route
    Rational predicted;   // 0, 1 or q_p(k)
};

struct Lemma1Report {
    int p = -1;
    // Degree of q_p for p >= 1, otherwise p itself.
    int degree = -1;
    std::vector<Lemma1Sample> samples;
};

// Checks C_{-1}(k) against the Bernoulli route at max(p + 3, 3) consecutive
// k starting from -m_min. Requires a rF_{r-1} instance. Throws
// Error(CheckFailed) naming the first discrepant k.
Lemma1Report lemma1_check(const IdentityInstance &inst);

} // namespace hypsum

#endif
