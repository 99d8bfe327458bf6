#include <hypsum/rational_function.hpp>

#include <cstddef>
#include <string>

#include <hypsum/error.hpp>

namespace hypsum
{

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : m_num(std::move(num)), m_den(std::move(den))
{
    if (m_den.is_zero()) {
        throw Error(ErrorKind::InvalidArgument, "rational function with zero denominator");
    }
}

RationalFunction RationalFunction::normalize() const
{
    const Polynomial g = gcd(m_num, m_den);
    Polynomial num = divmod(m_num, g).first;
    Polynomial den = divmod(m_den, g).first;
    const Rational lead_inv = Rational(1) / den.leading();
    return RationalFunction(num * lead_inv, den * lead_inv);
}

Rational RationalFunction::evaluate(const Rational &x) const
{
    const Rational d = m_den.evaluate(x);
    if (d.is_zero()) {
        throw Error(ErrorKind::InvalidArgument, "rational function evaluated at a root of its denominator");
    }
    return m_num.evaluate(x) / d;
}

Rational InfinityExpansion::coefficient(int exponent) const
{
    if (top == Polynomial::zero_degree || exponent > top) {
        return Rational(0);
    }
    const long idx = static_cast<long>(top) - exponent;
    if (idx >= static_cast<long>(coefficients.size())) {
        throw Error(ErrorKind::TruncationExceeded,
                    "expansion at infinity not computed down to z^" + std::to_string(exponent));
    }
    return coefficients[static_cast<std::size_t>(idx)];
}

InfinityExpansion expansion_at_infinity(const RationalFunction &f, int depth)
{
    if (depth < 1) {
        throw Error(ErrorKind::InvalidArgument, "expansion depth must be positive");
    }
    InfinityExpansion out;
    if (f.num().is_zero()) {
        return out;
    }
    const int dn = f.num().degree();
    const int dd = f.den().degree();
    out.top = dn - dd;

    // With w = 1/z: f = z^top * N~(w) / D~(w), where N~, D~ are the reversed
    // coefficient lists. Divide as power series in w.
    const auto &nc = f.num().coefficients();
    const auto &dc = f.den().coefficients();
    auto rev_num = [&](int i) { return i <= dn ? nc[static_cast<std::size_t>(dn - i)] : Rational(0); };
    auto rev_den = [&](int i) { return i <= dd ? dc[static_cast<std::size_t>(dd - i)] : Rational(0); };

    const Rational lead_inv = Rational(1) / rev_den(0);
    out.coefficients.reserve(static_cast<std::size_t>(depth));
    for (int t = 0; t < depth; ++t) {
        Rational acc = rev_num(t);
        for (int i = 1; i <= t && i <= dd; ++i) {
            acc -= rev_den(i) * out.coefficients[static_cast<std::size_t>(t - i)];
        }
        out.coefficients.push_back(acc * lead_inv);
    }
    return out;
}

} // namespace hypsum
