#ifndef HYPSUM_RATIONAL_HPP
#define HYPSUM_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hypsum
{

// Exact rational scalar, always kept in canonical form (positive denominator,
// coprime numerator and denominator).
class Rational
{
public:
    Rational() = default;
    Rational(std::int64_t value);
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(const mpq_class &value);

    // Accepts "p" or "p/q" with an optional leading '-' on the numerator.
    static Rational parse(std::string_view text);

    // Canonical "p/q" or "p" form.
    std::string to_string() const;

    bool is_zero() const
    {
        return sgn(m_value) == 0;
    }
    bool is_integer() const;
    int sign() const
    {
        return sgn(m_value);
    }

    // Only valid when the value fits in a signed 64-bit integer.
    std::int64_t floor_int() const;
    long double to_long_double() const;

    const mpq_class &raw() const
    {
        return m_value;
    }

    Rational operator-() const;
    Rational &operator+=(const Rational &other);
    Rational &operator-=(const Rational &other);
    Rational &operator*=(const Rational &other);
    // Throws Error(InvalidArgument) on division by zero.
    Rational &operator/=(const Rational &other);

    friend Rational operator+(Rational lhs, const Rational &rhs)
    {
        return lhs += rhs;
    }
    friend Rational operator-(Rational lhs, const Rational &rhs)
    {
        return lhs -= rhs;
    }
    friend Rational operator*(Rational lhs, const Rational &rhs)
    {
        return lhs *= rhs;
    }
    friend Rational operator/(Rational lhs, const Rational &rhs)
    {
        return lhs /= rhs;
    }

    friend bool operator==(const Rational &lhs, const Rational &rhs)
    {
        return lhs.m_value == rhs.m_value;
    }
    friend std::strong_ordering operator<=>(const Rational &lhs, const Rational &rhs)
    {
        const int c = cmp(lhs.m_value, rhs.m_value);
        return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class m_value{0};
};

std::ostream &operator<<(std::ostream &os, const Rational &q);

// (-1)^e for any integer e.
inline Rational sign_power(std::int64_t e)
{
    return (e % 2 == 0) ? Rational(1) : Rational(-1);
}

Rational factorial(int n);
Rational binomial(int n, int k);
Rational pow(const Rational &base, unsigned exponent);

} // namespace hypsum

#endif
