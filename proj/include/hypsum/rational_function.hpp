#ifndef HYPSUM_RATIONAL_FUNCTION_HPP
#define HYPSUM_RATIONAL_FUNCTION_HPP

#include <vector>

#include <hypsum/polynomial.hpp>
#include <hypsum/rational.hpp>

namespace hypsum
{

// num / den with den != 0. Not reduced unless normalize() is called.
class RationalFunction
{
public:
    RationalFunction(Polynomial num, Polynomial den);

    const Polynomial &num() const
    {
        return m_num;
    }
    const Polynomial &den() const
    {
        return m_den;
    }

    // Cancels the gcd and makes the denominator monic.
    RationalFunction normalize() const;

    // Throws if den(x) == 0.
    Rational evaluate(const Rational &x) const;

private:
    Polynomial m_num;
    Polynomial m_den;
};

// Laurent expansion at z = infinity: f(z) = sum_{j <= top} C_j z^j.
struct InfinityExpansion {
    // deg(num) - deg(den); Polynomial::zero_degree for f == 0.
    int top = Polynomial::zero_degree;
    // C_top, C_{top-1}, ..., one entry per requested term.
    std::vector<Rational> coefficients;

    // C_exponent; zero above top. Throws Error(TruncationExceeded) if the
    // exponent lies below the computed depth.
    Rational coefficient(int exponent) const;
};

InfinityExpansion expansion_at_infinity(const RationalFunction &f, int depth);

} // namespace hypsum

#endif
