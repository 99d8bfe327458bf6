#ifndef HYPSUM_HYPER_HPP
#define HYPSUM_HYPER_HPP

#include <span>
#include <vector>

#include <hypsum/laurent_series.hpp>
#include <hypsum/rational.hpp>

namespace hypsum
{

enum class Theorem { One, Two };

// Parameters of one sum-of-products identity. s == r selects the rF_{r-1}
// form, s < r the confluent sF_{r-1} form.
struct IdentityInstance {
    std::vector<Rational> a; // r entries
    std::vector<Rational> b; // s entries
    std::vector<int> m;      // s entries
    std::vector<int> n;      // r entries

    int r() const
    {
        return static_cast<int>(a.size());
    }
    int s() const
    {
        return static_cast<int>(b.size());
    }

    friend bool operator==(const IdentityInstance &, const IdentityInstance &) = default;
};

struct DerivedQuantities {
    int M = 0;
    int N = 0;
    int m_min = 0; // 0 when s == 0
    int n_max = 0;
    int p = -1;
    Theorem theorem = Theorem::One;

    friend bool operator==(const DerivedQuantities &, const DerivedQuantities &) = default;
};

// Rising factorial (x)_k = Gamma(x + k) / Gamma(x) for any integer k.
// Throws Error(PochhammerPole) when k < 0 and one of x+k, ..., x-1 is zero.
Rational pochhammer(const Rational &x, int k);

// Componentwise product of Pochhammer symbols.
Rational pochhammer_vec(std::span<const Rational> xs, std::span<const int> ks);

// Same shift for every component: prod_i (xs_i)_k.
Rational pochhammer_vec(std::span<const Rational> xs, int k);

// Coefficients 0..K of pFq(upper; lower | scale * z).
LaurentSeries hyper_series(std::span<const Rational> upper, std::span<const Rational> lower, int K,
                           const Rational &scale = Rational(1));

// Checks every structural invariant and that the prefactors are pole-free,
// then computes the derived quantities.
DerivedQuantities validate(const IdentityInstance &inst);

// Floor division for possibly negative numerators.
int floor_div(int num, int den);

// The vector with component `skip` removed.
template <typename T>
std::vector<T> omit(std::span<const T> v, int skip)
{
    std::vector<T> out;
    out.reserve(v.size());
    for (int i = 0; i < static_cast<int>(v.size()); ++i) {
        if (i != skip) {
            out.push_back(v[static_cast<std::size_t>(i)]);
        }
    }
    return out;
}

} // namespace hypsum

#endif
