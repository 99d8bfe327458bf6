#include <hypsum/polynomial.hpp>

#include <algorithm>
#include <cstddef>

#include <hypsum/error.hpp>

namespace hypsum
{

Polynomial::Polynomial(std::vector<Rational> coefficients) : m_coeffs(std::move(coefficients))
{
    strip();
}

Polynomial::Polynomial(const Rational &constant)
{
    if (!constant.is_zero()) {
        m_coeffs.push_back(constant);
    }
}

Polynomial Polynomial::monomial(const Rational &c, int e)
{
    if (e < 0) {
        throw Error(ErrorKind::InvalidArgument, "negative monomial exponent");
    }
    std::vector<Rational> coeffs(static_cast<std::size_t>(e) + 1);
    coeffs.back() = c;
    return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::linear_root(const Rational &root)
{
    return Polynomial({-root, Rational(1)});
}

Polynomial Polynomial::affine(const Rational &scale, const Rational &shift)
{
    return Polynomial({shift, scale});
}

void Polynomial::strip()
{
    while (!m_coeffs.empty() && m_coeffs.back().is_zero()) {
        m_coeffs.pop_back();
    }
}

Rational Polynomial::coefficient(int e) const
{
    if (e < 0 || e > degree()) {
        return Rational(0);
    }
    return m_coeffs[static_cast<std::size_t>(e)];
}

const Rational &Polynomial::leading() const
{
    if (is_zero()) {
        throw Error(ErrorKind::InvalidArgument, "leading coefficient of the zero polynomial");
    }
    return m_coeffs.back();
}

Rational Polynomial::evaluate(const Rational &x) const
{
    Rational acc(0);
    for (auto it = m_coeffs.rbegin(); it != m_coeffs.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Polynomial Polynomial::compose(const Polynomial &inner) const
{
    Polynomial acc;
    for (auto it = m_coeffs.rbegin(); it != m_coeffs.rend(); ++it) {
        acc *= inner;
        acc += Polynomial(*it);
    }
    return acc;
}

Polynomial Polynomial::monic() const
{
    if (is_zero()) {
        return *this;
    }
    Polynomial out(*this);
    out *= Rational(1) / leading();
    return out;
}

Polynomial Polynomial::operator-() const
{
    Polynomial out(*this);
    for (auto &c : out.m_coeffs) {
        c = -c;
    }
    return out;
}

Polynomial &Polynomial::operator+=(const Polynomial &other)
{
    if (other.m_coeffs.size() > m_coeffs.size()) {
        m_coeffs.resize(other.m_coeffs.size());
    }
    for (std::size_t i = 0; i < other.m_coeffs.size(); ++i) {
        m_coeffs[i] += other.m_coeffs[i];
    }
    strip();
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &other)
{
    return *this += -other;
}

Polynomial &Polynomial::operator*=(const Polynomial &other)
{
    if (is_zero() || other.is_zero()) {
        m_coeffs.clear();
        return *this;
    }
    std::vector<Rational> out(m_coeffs.size() + other.m_coeffs.size() - 1);
    for (std::size_t i = 0; i < m_coeffs.size(); ++i) {
        if (m_coeffs[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < other.m_coeffs.size(); ++j) {
            out[i + j] += m_coeffs[i] * other.m_coeffs[j];
        }
    }
    m_coeffs = std::move(out);
    strip();
    return *this;
}

Polynomial &Polynomial::operator*=(const Rational &c)
{
    if (c.is_zero()) {
        m_coeffs.clear();
        return *this;
    }
    for (auto &x : m_coeffs) {
        x *= c;
    }
    return *this;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial &dividend, const Polynomial &divisor)
{
    if (divisor.is_zero()) {
        throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
    }
    const int dd = divisor.degree();
    std::vector<Rational> rem = dividend.coefficients();
    if (dividend.degree() < dd) {
        return {Polynomial(), dividend};
    }
    std::vector<Rational> quot(static_cast<std::size_t>(dividend.degree() - dd) + 1);
    const Rational lead_inv = Rational(1) / divisor.leading();
    for (int e = dividend.degree(); e >= dd; --e) {
        const Rational q = rem[static_cast<std::size_t>(e)] * lead_inv;
        quot[static_cast<std::size_t>(e - dd)] = q;
        if (q.is_zero()) {
            continue;
        }
        for (int i = 0; i <= dd; ++i) {
            rem[static_cast<std::size_t>(e - dd + i)] -= q * divisor.coefficient(i);
        }
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::pair<Polynomial, Rational> synthetic_division(const Polynomial &p, const Rational &root)
{
    if (p.is_zero()) {
        return {Polynomial(), Rational(0)};
    }
    const auto &c = p.coefficients();
    std::vector<Rational> quot(c.size() - 1);
    Rational carry(0);
    for (std::size_t i = c.size(); i-- > 0;) {
        carry = carry * root + c[i];
        if (i > 0) {
            quot[i - 1] = carry;
        }
    }
    return {Polynomial(std::move(quot)), carry};
}

Polynomial gcd(Polynomial a, Polynomial b)
{
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

} // namespace hypsum
