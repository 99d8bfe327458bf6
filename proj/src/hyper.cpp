#include <hypsum/hyper.hpp>

#include <algorithm>
#include <numeric>
#include <string>

#include <hypsum/error.hpp>

namespace hypsum
{

Rational pochhammer(const Rational &x, int k)
{
    Rational out(1);
    if (k >= 0) {
        for (int t = 0; t < k; ++t) {
            out *= x + Rational(t);
        }
        return out;
    }
    for (int t = 1; t <= -k; ++t) {
        const Rational factor = x - Rational(t);
        if (factor.is_zero()) {
            throw Error(ErrorKind::PochhammerPole,
                        "(" + x.to_string() + ")_" + std::to_string(k) + " has a pole");
        }
        out *= factor;
    }
    return Rational(1) / out;
}

Rational pochhammer_vec(std::span<const Rational> xs, std::span<const int> ks)
{
    if (xs.size() != ks.size()) {
        throw Error(ErrorKind::DimensionMismatch, "pochhammer_vec: length mismatch");
    }
    Rational out(1);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out *= pochhammer(xs[i], ks[i]);
    }
    return out;
}

Rational pochhammer_vec(std::span<const Rational> xs, int k)
{
    Rational out(1);
    for (const auto &x : xs) {
        out *= pochhammer(x, k);
    }
    return out;
}

LaurentSeries hyper_series(std::span<const Rational> upper, std::span<const Rational> lower, int K,
                           const Rational &scale)
{
    for (const auto &l : lower) {
        if (l.is_integer() && l.sign() <= 0) {
            throw Error(ErrorKind::BadLowerParameter,
                        "lower parameter " + l.to_string() + " is a non-positive integer");
        }
    }
    if (K < 0) {
        return LaurentSeries(0, {}, K);
    }
    // Term ratio c_{k+1}/c_k = scale * prod(upper + k) / (prod(lower + k) (k + 1)).
    std::vector<Rational> coeffs;
    coeffs.reserve(static_cast<std::size_t>(K) + 1);
    Rational term(1);
    coeffs.push_back(term);
    for (int k = 0; k < K; ++k) {
        if (!term.is_zero()) {
            for (const auto &u : upper) {
                term *= u + Rational(k);
            }
            Rational den(k + 1);
            for (const auto &l : lower) {
                den *= l + Rational(k);
            }
            term *= scale;
            term /= den;
        }
        coeffs.push_back(term);
    }
    return LaurentSeries(0, std::move(coeffs), K);
}

int floor_div(int num, int den)
{
    int q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) {
        --q;
    }
    return q;
}

DerivedQuantities validate(const IdentityInstance &inst)
{
    const int r = inst.r();
    const int s = inst.s();
    if (static_cast<int>(inst.n.size()) != r) {
        throw Error(ErrorKind::DimensionMismatch, "len(n) must equal len(a)");
    }
    if (static_cast<int>(inst.m.size()) != s) {
        throw Error(ErrorKind::DimensionMismatch, "len(m) must equal len(b)");
    }
    if (r < 2) {
        throw Error(ErrorKind::DimensionMismatch, "at least two a-parameters are required");
    }
    if (s > r) {
        throw Error(ErrorKind::DimensionMismatch, "len(b) must not exceed len(a)");
    }
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < i; ++j) {
            if ((inst.a[i] - inst.a[j]).is_integer()) {
                throw Error(ErrorKind::NotDistinctModZ, "a[" + std::to_string(j) + "] and a[" + std::to_string(i)
                                                            + "] differ by an integer");
            }
        }
    }
    // (1 - b + a_i)_{m - n_i}; the other prefactor factor never vanishes or
    // blows up once the a's are distinct modulo integers.
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < s; ++j) {
            try {
                (void)pochhammer(Rational(1) - inst.b[j] + inst.a[i], inst.m[j] - inst.n[i]);
            } catch (const Error &) {
                throw Error(ErrorKind::PrefactorPole, "prefactor (1 - b[" + std::to_string(j) + "] + a["
                                                          + std::to_string(i) + "]) has a pole");
            }
        }
    }

    DerivedQuantities d;
    d.M = std::accumulate(inst.m.begin(), inst.m.end(), 0);
    d.N = std::accumulate(inst.n.begin(), inst.n.end(), 0);
    d.m_min = s == 0 ? 0 : *std::min_element(inst.m.begin(), inst.m.end());
    d.n_max = *std::max_element(inst.n.begin(), inst.n.end());
    const int excess = d.M - d.N - r + 1;
    if (s == r) {
        d.theorem = Theorem::One;
        d.p = std::max(-1, excess);
    } else {
        d.theorem = Theorem::Two;
        d.p = floor_div(excess, r - s);
    }
    return d;
}

} // namespace hypsum
