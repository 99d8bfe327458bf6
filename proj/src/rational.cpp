#include <hypsum/rational.hpp>

#include <cctype>
#include <ostream>

#include <hypsum/error.hpp>

namespace hypsum
{

namespace
{

bool is_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational::Rational(std::int64_t value) : m_value(static_cast<long>(value)) {}

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0) {
        throw Error(ErrorKind::InvalidArgument, "rational with zero denominator");
    }
    m_value = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    m_value.canonicalize();
}

Rational::Rational(const mpq_class &value) : m_value(value)
{
    m_value.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::string_view num = text;
    std::string_view den;
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!is_digits(den)) {
            throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
        }
    }
    std::string_view digits = num;
    if (!digits.empty() && digits.front() == '-') {
        digits.remove_prefix(1);
    }
    if (!is_digits(digits)) {
        throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(den.empty() ? std::string("1") : std::string(den), 10);
    if (d == 0) {
        throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    }
    return Rational(mpq_class(n, d));
}

std::string Rational::to_string() const
{
    return m_value.get_str(10);
}

bool Rational::is_integer() const
{
    return m_value.get_den() == 1;
}

std::int64_t Rational::floor_int() const
{
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), m_value.get_num_mpz_t(), m_value.get_den_mpz_t());
    if (!q.fits_slong_p()) {
        throw Error(ErrorKind::InvalidArgument, "integer part out of range");
    }
    return q.get_si();
}

long double Rational::to_long_double() const
{
    // Go through decimal strings so long double keeps its extra precision.
    const long double num = std::stold(m_value.get_num().get_str(10));
    const long double den = std::stold(m_value.get_den().get_str(10));
    return num / den;
}

Rational Rational::operator-() const
{
    Rational out;
    out.m_value = -m_value;
    return out;
}

Rational &Rational::operator+=(const Rational &other)
{
    m_value += other.m_value;
    return *this;
}

Rational &Rational::operator-=(const Rational &other)
{
    m_value -= other.m_value;
    return *this;
}

Rational &Rational::operator*=(const Rational &other)
{
    m_value *= other.m_value;
    return *this;
}

Rational &Rational::operator/=(const Rational &other)
{
    if (other.is_zero()) {
        throw Error(ErrorKind::InvalidArgument, "division by zero");
    }
    m_value /= other.m_value;
    return *this;
}

std::ostream &operator<<(std::ostream &os, const Rational &q)
{
    return os << q.to_string();
}

Rational factorial(int n)
{
    if (n < 0) {
        throw Error(ErrorKind::InvalidArgument, "factorial of a negative integer");
    }
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(mpq_class(out));
}

Rational binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n) {
        return Rational(0);
    }
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(mpq_class(out));
}

Rational pow(const Rational &base, unsigned exponent)
{
    Rational out(1);
    for (unsigned i = 0; i < exponent; ++i) {
        out *= base;
    }
    return out;
}

} // namespace hypsum
