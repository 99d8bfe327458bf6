#include <hypsum/laurent_series.hpp>

#include <algorithm>
#include <cstddef>
#include <string>

#include <hypsum/error.hpp>

namespace hypsum
{

LaurentSeries::LaurentSeries(int truncation) : m_low(0), m_truncation(truncation) {}

LaurentSeries::LaurentSeries(int low, std::vector<Rational> coefficients, int truncation)
    : m_low(low), m_coeffs(std::move(coefficients)), m_truncation(truncation)
{
    const long keep = static_cast<long>(truncation) - low + 1;
    if (keep <= 0) {
        m_coeffs.clear();
    } else if (static_cast<long>(m_coeffs.size()) > keep) {
        m_coeffs.resize(static_cast<std::size_t>(keep));
    }
}

Rational LaurentSeries::coefficient(int exponent) const
{
    if (exponent > m_truncation) {
        throw Error(ErrorKind::TruncationExceeded, "coefficient of z^" + std::to_string(exponent)
                                                       + " requested beyond truncation order "
                                                       + std::to_string(m_truncation));
    }
    if (exponent < m_low || exponent > high()) {
        return Rational(0);
    }
    return m_coeffs[static_cast<std::size_t>(exponent - m_low)];
}

bool LaurentSeries::is_zero() const
{
    return std::all_of(m_coeffs.begin(), m_coeffs.end(), [](const Rational &c) { return c.is_zero(); });
}

LaurentSeries LaurentSeries::shifted(int shift) const
{
    return LaurentSeries(m_low + shift, m_coeffs, m_truncation + shift);
}

LaurentSeries LaurentSeries::operator-() const
{
    LaurentSeries out(*this);
    for (auto &c : out.m_coeffs) {
        c = -c;
    }
    return out;
}

LaurentSeries &LaurentSeries::operator*=(const Rational &c)
{
    for (auto &x : m_coeffs) {
        x *= c;
    }
    return *this;
}

LaurentSeries operator+(const LaurentSeries &a, const LaurentSeries &b)
{
    const int trunc = std::min(a.truncation(), b.truncation());
    const int low = std::min(a.low(), b.low());
    if (trunc < low) {
        return LaurentSeries(low, {}, trunc);
    }
    std::vector<Rational> coeffs(static_cast<std::size_t>(trunc - low + 1));
    for (int e = low; e <= trunc; ++e) {
        coeffs[static_cast<std::size_t>(e - low)] = a.coefficient(e) + b.coefficient(e);
    }
    return LaurentSeries(low, std::move(coeffs), trunc);
}

LaurentSeries operator-(const LaurentSeries &a, const LaurentSeries &b)
{
    return a + (-b);
}

LaurentSeries series_mul(const LaurentSeries &a, const LaurentSeries &b)
{
    const int low = a.low() + b.low();
    const int trunc = std::min(a.truncation() + b.low(), b.truncation() + a.low());
    if (trunc < low) {
        return LaurentSeries(low, {}, trunc);
    }
    std::vector<Rational> out(static_cast<std::size_t>(trunc - low + 1));
    // Only stored (possibly nonzero) coefficients participate.
    for (int i = a.low(); i <= a.high(); ++i) {
        const Rational ai = a.coefficient(i);
        if (ai.is_zero()) {
            continue;
        }
        const int jmax = std::min(b.high(), trunc - i);
        for (int j = b.low(); j <= jmax; ++j) {
            out[static_cast<std::size_t>(i + j - low)] += ai * b.coefficient(j);
        }
    }
    return LaurentSeries(low, std::move(out), trunc);
}

LaurentSeries one_minus_z_pow(int e, int K)
{
    if (e < 0) {
        throw Error(ErrorKind::InvalidArgument, "(1 - z)^e requires e >= 0");
    }
    std::vector<Rational> coeffs(static_cast<std::size_t>(e) + 1);
    for (int i = 0; i <= e; ++i) {
        coeffs[static_cast<std::size_t>(i)] = sign_power(i) * binomial(e, i);
    }
    return LaurentSeries(0, std::move(coeffs), K);
}

} // namespace hypsum
