#include <hypsum/residue.hpp>

#include <string>

#include <hypsum/error.hpp>

namespace hypsum
{

namespace
{

// (z + shift)_len as a rational function of z: a polynomial numerator for
// len >= 0, a polynomial denominator for len < 0.
void append_rising(Polynomial &num, Polynomial &den, const Rational &shift, int len)
{
    if (len >= 0) {
        for (int t = 0; t < len; ++t) {
            num *= Polynomial::linear_root(-(shift + Rational(t)));
        }
    } else {
        for (int t = 1; t <= -len; ++t) {
            den *= Polynomial::linear_root(-(shift - Rational(t)));
        }
    }
}

} // namespace

FkFunction build_f_k(const IdentityInstance &inst, int k)
{
    const DerivedQuantities d = validate(inst);
    if (k < -d.m_min) {
        throw Error(ErrorKind::KBelowRange,
                    "f_k requires k >= -m_min = " + std::to_string(-d.m_min) + ", got " + std::to_string(k));
    }
    Polynomial num(Rational(1));
    Polynomial den(Rational(1));
    for (int j = 0; j < inst.s(); ++j) {
        append_rising(num, den, -inst.b[j] - Rational(k) + Rational(1), inst.m[j] + k);
    }
    // Denominator factors: a negative length moves them into the numerator.
    for (int i = 0; i < inst.r(); ++i) {
        append_rising(den, num, -inst.a[i] - Rational(k), inst.n[i] + k + 1);
    }

    std::vector<Pole> poles;
    for (int i = 0; i < inst.r(); ++i) {
        for (int j = 0; j <= k + inst.n[i]; ++j) {
            poles.push_back(Pole{inst.a[i] + Rational(k - j), i, j});
        }
    }
    return FkFunction{k, RationalFunction(std::move(num), std::move(den)), std::move(poles)};
}

Rational residue_at_simple_pole(const RationalFunction &f, const Rational &z0)
{
    auto [rest, rem] = synthetic_division(f.den(), z0);
    if (!rem.is_zero()) {
        throw Error(ErrorKind::InvalidArgument, z0.to_string() + " is not a root of the denominator");
    }
    const Rational d0 = rest.evaluate(z0);
    if (d0.is_zero()) {
        throw Error(ErrorKind::NotSimplePole, z0.to_string() + " is a repeated root of the denominator");
    }
    return f.num().evaluate(z0) / d0;
}

Rational gamma_coeff(const IdentityInstance &inst, int i, int k, int j)
{
    const int top = k + inst.n[i];
    if (j < 0 || j > top) {
        return Rational(0);
    }
    const Rational &ai = inst.a[i];
    const Rational shift = ai - Rational(j);

    Rational num = sign_power(j);
    for (int l = 0; l < inst.s(); ++l) {
        num *= pochhammer(Rational(1) - inst.b[l] + shift, inst.m[l] + k);
    }
    Rational den = factorial(j) * factorial(top - j);
    for (int l = 0; l < inst.r(); ++l) {
        if (l != i) {
            den *= pochhammer(shift - inst.a[l], inst.n[l] + k + 1);
        }
    }
    return num / den;
}

Rational gamma_coeff_from_series(const IdentityInstance &inst, int i, int k, int j)
{
    const int top = k + inst.n[i];
    if (j < 0 || j > top) {
        return Rational(0);
    }
    const int r = inst.r();
    const int s = inst.s();
    const int ni = inst.n[i];
    const Rational &ai = inst.a[i];

    Rational num(1);
    Rational den(1);
    for (int l = 0; l < s; ++l) {
        const Rational one_minus_b = Rational(1) - inst.b[l] + ai;
        num *= pochhammer(one_minus_b, inst.m[l] - ni);
        num *= pochhammer(inst.b[l] - ai, j);
        num *= pochhammer(one_minus_b + Rational(inst.m[l] - ni), top - j);
    }
    for (int l = 0; l < r; ++l) {
        if (l == i) {
            continue;
        }
        den *= pochhammer(ai - inst.a[l], inst.n[l] - ni + 1);
        den *= pochhammer(Rational(1) + inst.a[l] - ai, j);
        den *= pochhammer(Rational(1) - inst.a[l] + ai + Rational(inst.n[l] - ni), top - j);
    }
    den *= factorial(j) * factorial(top - j);
    // The series product differs from the closed form by (-1)^{j(r-s)}.
    return sign_power(static_cast<long>(j) * (r - s)) * num / den;
}

Rational gamma_double_sum(const IdentityInstance &inst, int k)
{
    Rational total(0);
    for (int i = 0; i < inst.r(); ++i) {
        for (int j = 0; j <= k + inst.n[i]; ++j) {
            total += gamma_coeff(inst, i, k, j);
        }
    }
    return total;
}

Rational sum_finite_residues(const FkFunction &fk)
{
    Rational total(0);
    for (const auto &pole : fk.poles) {
        total += residue_at_simple_pole(fk.f, pole.location);
    }
    return total;
}

Rational c_minus_one(const FkFunction &fk)
{
    if (fk.f.num().is_zero()) {
        return Rational(0);
    }
    const int top = fk.f.num().degree() - fk.f.den().degree();
    if (top < -1) {
        return Rational(0);
    }
    return expansion_at_infinity(fk.f, top + 2).coefficient(-1);
}

} // namespace hypsum
