#ifndef HYPSUM_LAURENT_SERIES_HPP
#define HYPSUM_LAURENT_SERIES_HPP

#include <vector>

#include <hypsum/rational.hpp>

namespace hypsum
{

// Truncated formal Laurent series in z.
//
// Coefficients are stored densely for exponents low() .. high(). Every
// coefficient with exponent <= truncation() is exact (exponents below low()
// and in (high(), truncation()] are exactly zero); anything above the
// truncation is unknown and reading it throws.
class LaurentSeries
{
public:
    // The zero series known exactly through `truncation`.
    explicit LaurentSeries(int truncation = 0);
    // Coefficients past `truncation` are discarded.
    LaurentSeries(int low, std::vector<Rational> coefficients, int truncation);

    int low() const
    {
        return m_low;
    }
    int high() const
    {
        return m_low + static_cast<int>(m_coeffs.size()) - 1;
    }
    int truncation() const
    {
        return m_truncation;
    }

    // Throws Error(TruncationExceeded) when exponent > truncation().
    Rational coefficient(int exponent) const;

    // True iff every exactly-known coefficient is zero.
    bool is_zero() const;

    // Multiplication by z^shift.
    LaurentSeries shifted(int shift) const;
    LaurentSeries operator-() const;

    LaurentSeries &operator*=(const Rational &c);
    friend LaurentSeries operator*(LaurentSeries s, const Rational &c)
    {
        return s *= c;
    }

private:
    int m_low = 0;
    std::vector<Rational> m_coeffs;
    int m_truncation = 0;
};

// Sum; result truncation is the smaller of the two.
LaurentSeries operator+(const LaurentSeries &a, const LaurentSeries &b);
LaurentSeries operator-(const LaurentSeries &a, const LaurentSeries &b);

// Cauchy product. The result low is a.low + b.low and its truncation is
// min(a.truncation + b.low, b.truncation + a.low), the largest exponent whose
// convolution only touches exactly known coefficients.
LaurentSeries series_mul(const LaurentSeries &a, const LaurentSeries &b);
inline LaurentSeries operator*(const LaurentSeries &a, const LaurentSeries &b)
{
    return series_mul(a, b);
}

// (1 - z)^e as a series exact through K. Throws on negative e.
LaurentSeries one_minus_z_pow(int e, int K);

} // namespace hypsum

#endif
