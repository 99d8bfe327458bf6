#ifndef HYPSUM_TEST_SUPPORT_HPP
#define HYPSUM_TEST_SUPPORT_HPP

#include <random>
#include <vector>

#include <hypsum/fuzz.hpp>
#include <hypsum/hyper.hpp>
#include <hypsum/laurent_series.hpp>
#include <hypsum/polynomial.hpp>
#include <hypsum/rational.hpp>

namespace hypsum::test
{

inline Rational q(std::int64_t p, std::int64_t d = 1)
{
    return Rational(p, d);
}

inline Rational small_rational(std::mt19937_64 &rng)
{
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 6);
    return Rational(num(rng), den(rng));
}

inline Polynomial random_poly(std::mt19937_64 &rng, int max_degree)
{
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto &x : c) {
        x = small_rational(rng);
    }
    return Polynomial(std::move(c));
}

inline LaurentSeries random_series(std::mt19937_64 &rng)
{
    std::uniform_int_distribution<int> low(-3, 2);
    std::uniform_int_distribution<int> len(0, 6);
    std::uniform_int_distribution<int> extra(0, 4);
    const int lo = low(rng);
    std::vector<Rational> c(static_cast<std::size_t>(len(rng)));
    for (auto &x : c) {
        x = small_rational(rng);
    }
    const int high = lo + static_cast<int>(c.size()) - 1;
    return LaurentSeries(lo, std::move(c), std::max(high, lo) + extra(rng));
}

// Rising factorial written out independently of the library:
// Gamma(x + k) / Gamma(x) as a plain loop over factors.
inline Rational naive_rising(const Rational &x, int k)
{
    Rational out(1);
    if (k >= 0) {
        for (int t = 0; t < k; ++t) {
            out = out * (x + Rational(t));
        }
    } else {
        for (int t = k; t < 0; ++t) {
            out = out / (x + Rational(t));
        }
    }
    return out;
}

inline Rational naive_factorial(int n)
{
    Rational out(1);
    for (int t = 2; t <= n; ++t) {
        out = out * Rational(t);
    }
    return out;
}

// Brute-force coefficient of z^e in the left-hand side: for every term i a
// direct double sum over the two hypergeometric coefficient formulas,
// without the ratio recurrence or the Laurent-series machinery.
// `confluent_sign_fix` selects the sign-corrected confluent form; without
// it the literal (-1)^{s-r} prefactor is used.
inline Rational brute_force_lhs_coefficient(const IdentityInstance &inst, int e, bool confluent_sign_fix = true)
{
    const int r = inst.r();
    const int s = inst.s();
    Rational total(0);
    for (int i = 0; i < r; ++i) {
        const Rational &ai = inst.a[i];
        const int ni = inst.n[i];
        const int k = e + ni; // exponent before multiplying by z^{-n_i}
        if (k < 0) {
            continue;
        }
        Rational pre(1);
        for (int j = 0; j < s; ++j) {
            pre = pre * naive_rising(Rational(1) - inst.b[j] + ai, inst.m[j] - ni);
        }
        for (int l = 0; l < r; ++l) {
            if (l != i) {
                pre = pre / naive_rising(ai - inst.a[l], inst.n[l] - ni + 1);
            }
        }
        if (s < r) {
            const bool odd = ((r - s) % 2 != 0) && (!confluent_sign_fix || (1 + ni) % 2 != 0);
            if (odd) {
                pre = -pre;
            }
        }
        for (int j = 0; j <= k; ++j) {
            Rational c1(1);
            Rational c2(1);
            for (int l = 0; l < s; ++l) {
                c1 = c1 * naive_rising(inst.b[l] - ai, j);
                c2 = c2 * naive_rising(Rational(1) - inst.b[l] + ai + Rational(inst.m[l] - ni), k - j);
            }
            for (int l = 0; l < r; ++l) {
                if (l != i) {
                    c1 = c1 / naive_rising(Rational(1) + inst.a[l] - ai, j);
                    c2 = c2 / naive_rising(Rational(1) - inst.a[l] + ai + Rational(inst.n[l] - ni), k - j);
                }
            }
            c1 = c1 / naive_factorial(j);
            c2 = c2 / naive_factorial(k - j);
            if ((r - s) % 2 != 0 && (k - j) % 2 != 0) {
                c2 = -c2;
            }
            total += pre * c1 * c2;
        }
    }
    return total;
}

inline IdentityInstance zero_shift_r2()
{
    return IdentityInstance{{q(0), q(1, 2)}, {q(1, 3), q(1, 4)}, {0, 0}, {0, 0}};
}

inline std::vector<IdentityInstance> sample_instances(TheoremChoice choice, int count, std::uint64_t seed,
                                                      int r_max = 3)
{
    FuzzOptions opts;
    opts.count = count;
    opts.seed = seed;
    opts.r_max = r_max;
    opts.theorem = choice;
    return generate_instances(opts);
}

} // namespace hypsum::test

#endif
