#ifndef HYPSUM_POLYNOMIAL_HPP
#define HYPSUM_POLYNOMIAL_HPP

#include <limits>
#include <utility>
#include <vector>

#include <hypsum/rational.hpp>

namespace hypsum
{

// Dense univariate polynomial with exact coefficients. Index = exponent,
// trailing zeros are always stripped.
class Polynomial
{
public:
    // Degree of the zero polynomial.
    static constexpr int zero_degree = std::numeric_limits<int>::min();

    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    Polynomial(const Rational &constant);

    // The monomial c * x^e.
    static Polynomial monomial(const Rational &c, int e);
    // x - root.
    static Polynomial linear_root(const Rational &root);
    // scale * x + shift.
    static Polynomial affine(const Rational &scale, const Rational &shift);

    int degree() const
    {
        return m_coeffs.empty() ? zero_degree : static_cast<int>(m_coeffs.size()) - 1;
    }
    bool is_zero() const
    {
        return m_coeffs.empty();
    }
    // Coefficient of x^e; zero outside the stored range.
    Rational coefficient(int e) const;
    // Throws on the zero polynomial.
    const Rational &leading() const;
    const std::vector<Rational> &coefficients() const
    {
        return m_coeffs;
    }

    Rational evaluate(const Rational &x) const;
    // this(inner(x)).
    Polynomial compose(const Polynomial &inner) const;
    Polynomial monic() const;

    Polynomial operator-() const;
    Polynomial &operator+=(const Polynomial &other);
    Polynomial &operator-=(const Polynomial &other);
    Polynomial &operator*=(const Polynomial &other);
    Polynomial &operator*=(const Rational &c);

    friend Polynomial operator+(Polynomial lhs, const Polynomial &rhs)
    {
        return lhs += rhs;
    }
    friend Polynomial operator-(Polynomial lhs, const Polynomial &rhs)
    {
        return lhs -= rhs;
    }
    friend Polynomial operator*(Polynomial lhs, const Polynomial &rhs)
    {
        return lhs *= rhs;
    }
    friend Polynomial operator*(Polynomial lhs, const Rational &c)
    {
        return lhs *= c;
    }
    friend Polynomial operator*(const Rational &c, Polynomial rhs)
    {
        return rhs *= c;
    }
    friend bool operator==(const Polynomial &, const Polynomial &) = default;

private:
    void strip();

    std::vector<Rational> m_coeffs;
};

// Euclidean division: returns (quotient, remainder). Throws on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial &dividend, const Polynomial &divisor);

// Division by (x - root): returns (quotient, remainder value).
std::pair<Polynomial, Rational> synthetic_division(const Polynomial &p, const Rational &root);

// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

} // namespace hypsum

#endif
