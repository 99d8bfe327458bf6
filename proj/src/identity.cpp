#include <hypsum/identity.hpp>

#include <algorithm>
#include <string>

#include <hypsum/asymptotics.hpp>
#include <hypsum/error.hpp>
#include <hypsum/residue.hpp>

namespace hypsum
{

namespace
{

std::vector<Rational> plus_scalar(std::span<const Rational> v, const Rational &c)
{
    std::vector<Rational> out(v.begin(), v.end());
    for (auto &x : out) {
        x += c;
    }
    return out;
}

std::vector<Rational> scalar_minus(const Rational &c, std::span<const Rational> v)
{
    std::vector<Rational> out(v.begin(), v.end());
    for (auto &x : out) {
        x = c - x;
    }
    return out;
}

BetaTable extract_beta(const DerivedQuantities &d, const LaurentSeries &S, int K)
{
    BetaTable table;
    table.theorem = d.theorem;
    table.support_low = -d.n_max;
    table.support_high = support_high(d);

    LaurentSeries T = S;
    if (d.theorem == Theorem::One) {
        // (1 - z)^{p+1} is a polynomial: give it enough room that T stays exact through K.
        T = series_mul(one_minus_z_pow(d.p + 1, K + std::max(d.n_max, 0)), S);
    }
    for (int e = T.low(); e <= K; ++e) {
        const Rational c = T.coefficient(e);
        const bool inside = e >= table.support_low && e <= table.support_high;
        if (inside) {
            table.beta.emplace(e, c);
        } else if (!c.is_zero()) {
            throw Error(ErrorKind::SupportViolation, "coefficient of z^" + std::to_string(e) + " is "
                                                         + c.to_string() + ", outside the support ["
                                                         + std::to_string(table.support_low) + ", "
                                                         + std::to_string(table.support_high) + "]");
        }
    }
    return table;
}

} // namespace

bool VerificationReport::passed() const
{
    return vanishing_ok
           && std::none_of(cross_checks.begin(), cross_checks.end(),
                           [](const CrossCheck &c) { return c.status == CheckStatus::Fail; });
}

int support_high(const DerivedQuantities &d)
{
    return d.theorem == Theorem::One ? d.p - d.m_min : std::max(-d.m_min - 1, d.p);
}

int certification_order(const DerivedQuantities &d, int buffer)
{
    return std::max(support_high(d), -d.n_max) + buffer;
}

LaurentSeries lhs_series(const IdentityInstance &inst, int K)
{
    const DerivedQuantities d = validate(inst);
    if (K < -d.n_max) {
        throw Error(ErrorKind::TruncationTooSmall,
                    "truncation " + std::to_string(K) + " is below -n_max = " + std::to_string(-d.n_max));
    }
    const int r = inst.r();
    const int s = inst.s();
    const Rational one(1);
    const Rational arg_sign = sign_power(r - s);

    LaurentSeries total(-d.n_max, {}, K);
    for (int i = 0; i < r; ++i) {
        const Rational &ai = inst.a[i];
        const int ni = inst.n[i];
        const std::vector<Rational> others = omit<Rational>(inst.a, i);
        const std::vector<int> n_others = omit<int>(inst.n, i);

        // (1 - b + a_i)_{m - n_i} / (a_i - a_[i])_{n_[i] - n_i + 1}
        Rational prefactor(1);
        for (int j = 0; j < s; ++j) {
            prefactor *= pochhammer(one - inst.b[j] + ai, inst.m[j] - ni);
        }
        for (std::size_t l = 0; l < others.size(); ++l) {
            prefactor /= pochhammer(ai - others[l], n_others[l] - ni + 1);
        }
        if (d.theorem == Theorem::Two) {
            prefactor *= sign_power(static_cast<long>(r - s) * (1 + ni));
        }
        if (prefactor.is_zero()) {
            continue;
        }

        const int order = K + ni;
        const auto upper1 = plus_scalar(inst.b, -ai);
        const auto lower1 = plus_scalar(others, one - ai);
        std::vector<Rational> upper2 = scalar_minus(one + ai - Rational(ni), inst.b);
        for (int j = 0; j < s; ++j) {
            upper2[static_cast<std::size_t>(j)] += Rational(inst.m[j]);
        }
        std::vector<Rational> lower2 = scalar_minus(one + ai - Rational(ni), others);
        for (std::size_t l = 0; l < others.size(); ++l) {
            lower2[l] += Rational(n_others[l]);
        }

        const LaurentSeries F1 = hyper_series(upper1, lower1, order);
        const LaurentSeries F2 = hyper_series(upper2, lower2, order, arg_sign);
        total = total + (series_mul(F1, F2) * prefactor).shifted(-ni);
    }
    return total;
}

Rational series_sign(const IdentityInstance &inst, int k)
{
    if (inst.s() == inst.r()) {
        return Rational(1);
    }
    return sign_power(static_cast<long>(inst.r() - inst.s()) * (k + 1));
}

Rational alpha_coeff(const IdentityInstance &inst, int k)
{
    const DerivedQuantities d = validate(inst);
    if (k < -d.n_max || k > -d.m_min - 1) {
        throw Error(ErrorKind::KOutOfAlphaRange, "alpha_k is defined for " + std::to_string(-d.n_max)
                                                     + " <= k <= " + std::to_string(-d.m_min - 1) + ", got "
                                                     + std::to_string(k));
    }
    Rational total(0);
    for (int i = 0; i < inst.r(); ++i) {
        for (int j = 0; j <= k + inst.n[i]; ++j) {
            // Below -m_min the closed form can be 0 * infinity when some
            // b - a_i is an integer; the series product is always finite.
            try {
                total += gamma_coeff(inst, i, k, j);
            } catch (const Error &e) {
                if (e.kind() != ErrorKind::PochhammerPole) {
                    throw;
                }
                total += gamma_coeff_from_series(inst, i, k, j);
            }
        }
    }
    return series_sign(inst, k) * total;
}

BetaTable beta_coefficients(const IdentityInstance &inst, int buffer)
{
    if (buffer < 1) {
        throw Error(ErrorKind::InvalidArgument, "buffer must be positive");
    }
    const DerivedQuantities d = validate(inst);
    const int K = certification_order(d, buffer);
    return extract_beta(d, lhs_series(inst, K), K);
}

ResidueCheck residue_check(const IdentityInstance &inst, int k, const LaurentSeries &series)
{
    const DerivedQuantities d = validate(inst);
    const FkFunction fk = build_f_k(inst, k);

    ResidueCheck out;
    out.k = k;
    out.residue_sum = sum_finite_residues(fk);
    out.c_minus_one = c_minus_one(fk);
    out.gamma_sum = gamma_double_sum(inst, k);
    out.series_coefficient = series_sign(inst, k) * series.coefficient(k);
    const int expected_gap = d.M - d.N - inst.r() - (inst.r() - inst.s()) * k;
    out.degree_ok = fk.f.num().degree() - fk.f.den().degree() == expected_gap;
    return out;
}

ResidueCheck residue_check(const IdentityInstance &inst, int k)
{
    const DerivedQuantities d = validate(inst);
    return residue_check(inst, k, lhs_series(inst, std::max(k, -d.n_max)));
}

VerificationReport verify(const IdentityInstance &inst, int buffer)
{
    if (buffer < 1) {
        throw Error(ErrorKind::InvalidArgument, "buffer must be positive");
    }
    VerificationReport report;
    report.instance = inst;
    report.derived = validate(inst);
    const DerivedQuantities &d = report.derived;
    const int K = certification_order(d, buffer);
    report.checked_up_to = K;

    const LaurentSeries S = lhs_series(inst, K);
    try {
        report.beta = extract_beta(d, S, K);
        report.vanishing_ok = true;
    } catch (const Error &e) {
        if (e.kind() != ErrorKind::SupportViolation) {
            throw;
        }
        report.beta.theorem = d.theorem;
        report.beta.support_low = -d.n_max;
        report.beta.support_high = support_high(d);
        report.vanishing_detail = e.what();
    }

    CrossCheck residue{"residue", CheckStatus::Pass, {}};
    const int k_last = std::min(-d.m_min + buffer / 2, K);
    for (int k = -d.m_min; k <= k_last; ++k) {
        const ResidueCheck rc = residue_check(inst, k, S);
        if (!rc.agree()) {
            residue.status = CheckStatus::Fail;
            residue.detail = "routes disagree at k = " + std::to_string(k);
            break;
        }
    }
    report.cross_checks.push_back(std::move(residue));

    CrossCheck lemma{"lemma1", CheckStatus::Skipped, {}};
    if (d.theorem == Theorem::One) {
        try {
            const Lemma1Report lr = lemma1_check(inst);
            lemma.status = CheckStatus::Pass;
            lemma.detail = "checked " + std::to_string(lr.samples.size()) + " points";
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::CheckFailed) {
                throw;
            }
            lemma.status = CheckStatus::Fail;
            lemma.detail = e.what();
        }
    } else {
        lemma.detail = "confluent instance";
    }
    report.cross_checks.push_back(std::move(lemma));

    CrossCheck alpha{"alpha", CheckStatus::Pass, {}};
    for (int k = -d.n_max; k <= std::min(-d.m_min - 1, K); ++k) {
        if (alpha_coeff(inst, k) != S.coefficient(k)) {
            alpha.status = CheckStatus::Fail;
            alpha.detail = "alpha_k differs from the series at k = " + std::to_string(k);
            break;
        }
    }
    report.cross_checks.push_back(std::move(alpha));
    return report;
}

} // namespace hypsum
