#include <hypsum/asymptotics.hpp>

#include <algorithm>
#include <string>

#include <hypsum/error.hpp>
#include <hypsum/residue.hpp>

namespace hypsum
{

std::vector<Rational> bernoulli_numbers(int n)
{
    if (n < 0) {
        throw Error(ErrorKind::InvalidArgument, "Bernoulli index must be non-negative");
    }
    // sum_{i=0}^{j} C(j+1, i) B_i = 0 for j >= 1.
    std::vector<Rational> B{Rational(1)};
    for (int j = 1; j <= n; ++j) {
        Rational acc(0);
        for (int i = 0; i < j; ++i) {
            acc += binomial(j + 1, i) * B[static_cast<std::size_t>(i)];
        }
        B.push_back(-acc / Rational(j + 1));
    }
    return B;
}

Rational bernoulli_number(int j)
{
    return bernoulli_numbers(j).back();
}

Polynomial bernoulli_poly(int n)
{
    const auto B = bernoulli_numbers(n);
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
    for (int l = 0; l <= n; ++l) {
        coeffs[static_cast<std::size_t>(l)] = binomial(n, l) * B[static_cast<std::size_t>(n - l)];
    }
    return Polynomial(std::move(coeffs));
}

KPolynomial q_big_poly(const IdentityInstance &inst, int j)
{
    if (j < 1) {
        throw Error(ErrorKind::InvalidArgument, "Q_j requires j >= 1");
    }
    if (inst.s() != inst.r()) {
        throw Error(ErrorKind::InvalidArgument, "Q_j is defined for rF_{r-1} instances only");
    }
    const Polynomial Bj = bernoulli_poly(j + 1);
    const Rational one(1);
    const Rational minus_one(-1);
    Polynomial out;
    for (int i = 0; i < inst.r(); ++i) {
        const Rational &ai = inst.a[i];
        const Rational &bi = inst.b[i];
        out += Bj.compose(Polynomial::affine(minus_one, -ai));
        out -= Bj.compose(Polynomial::affine(minus_one, one - bi));
        out += Polynomial(Bj.evaluate(one - bi + Rational(inst.m[i])));
        out -= Polynomial(Bj.evaluate(one - ai + Rational(inst.n[i])));
    }
    return KPolynomial{std::move(out)};
}

KPolynomial q_small_poly(const IdentityInstance &inst, int s_index)
{
    if (s_index < 0) {
        throw Error(ErrorKind::InvalidArgument, "q_s requires s >= 0");
    }
    if (s_index == 0) {
        return KPolynomial{Polynomial(Rational(1))};
    }
    std::vector<Polynomial> G(static_cast<std::size_t>(s_index) + 1);
    for (int j = 1; j <= s_index; ++j) {
        G[static_cast<std::size_t>(j)] =
            q_big_poly(inst, j).poly * (sign_power(j + 1) / Rational(static_cast<std::int64_t>(j) * (j + 1)));
    }

    // compositions[l][t]: sum over ordered compositions t = t_1 + ... + t_l
    // (t_i >= 1) of G_{t_1} ... G_{t_l}, built by peeling off the first part.
    const auto S = static_cast<std::size_t>(s_index);
    std::vector<std::vector<Polynomial>> compositions(S + 1, std::vector<Polynomial>(S + 1));
    compositions[0][0] = Polynomial(Rational(1));
    for (std::size_t l = 1; l <= S; ++l) {
        for (std::size_t t = l; t <= S; ++t) {
            for (std::size_t first = 1; first + (l - 1) <= t; ++first) {
                compositions[l][t] += G[first] * compositions[l - 1][t - first];
            }
        }
    }
    std::vector<Polynomial> by_parts(S + 1);
    for (std::size_t l = 1; l <= S; ++l) {
        by_parts[l] = compositions[l][S];
    }

    Polynomial out;
    for (int l = 1; l <= s_index; ++l) {
        out += by_parts[static_cast<std::size_t>(l)] * (Rational(1) / factorial(l));
    }
    return KPolynomial{std::move(out)};
}

Lemma1Report lemma1_check(const IdentityInstance &inst)
{
    const DerivedQuantities d = validate(inst);
    if (d.theorem != Theorem::One) {
        throw Error(ErrorKind::InvalidArgument, "the C_{-1}(k) polynomial check applies to rF_{r-1} instances only");
    }
    Lemma1Report report;
    report.p = d.p;
    report.degree = d.p;

    KPolynomial qp;
    if (d.p >= 1) {
        qp = q_small_poly(inst, d.p);
        report.degree = qp.degree();
    }
    const int count = std::max(d.p + 3, 3);
    for (int k = -d.m_min; k < -d.m_min + count; ++k) {
        Lemma1Sample sample;
        sample.k = k;
        sample.c_minus_one = c_minus_one(build_f_k(inst, k));
        if (d.p == -1) {
            sample.predicted = Rational(0);
        } else if (d.p == 0) {
            sample.predicted = Rational(1);
        } else {
            sample.predicted = qp(k);
        }
        if (sample.c_minus_one != sample.predicted) {
            throw Error(ErrorKind::CheckFailed, "C_{-1}(" + std::to_string(k) + ") = " + sample.c_minus_one.to_string()
                                                    + " but the Bernoulli route gives "
                                                    + sample.predicted.to_string());
        }
        report.samples.push_back(std::move(sample));
    }
    return report;
}

} // namespace hypsum
