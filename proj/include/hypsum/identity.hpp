#ifndef HYPSUM_IDENTITY_HPP
#define HYPSUM_IDENTITY_HPP

#include <map>
#include <string>
#include <vector>

#include <hypsum/hyper.hpp>
#include <hypsum/laurent_series.hpp>
#include <hypsum/rational.hpp>

namespace hypsum
{

inline constexpr int default_buffer = 25;

// Right-hand side coefficients beta_j for j in [support_low, support_high].
// An empty interval means the right-hand side is identically zero.
struct BetaTable {
    Theorem theorem = Theorem::One;
    int support_low = 0;
    int support_high = -1;
    std::map<int, Rational> beta;

    bool empty() const
    {
        return support_high < support_low;
    }
    friend bool operator==(const BetaTable &, const BetaTable &) = default;
};

enum class CheckStatus { Pass, Fail, Skipped };

struct CrossCheck {
    std::string name;
    CheckStatus status = CheckStatus::Skipped;
    std::string detail;
};

struct VerificationReport {
    IdentityInstance instance;
    DerivedQuantities derived;
    BetaTable beta;
    int checked_up_to = 0;
    bool vanishing_ok = false;
    std::string vanishing_detail;
    std::vector<CrossCheck> cross_checks;

    // vanishing_ok and no failed cross-check.
    bool passed() const;
};

// Upper end of the certified support.
int support_high(const DerivedQuantities &d);

// Truncation order used for certification: max(support_high, -n_max) + buffer.
int certification_order(const DerivedQuantities &d, int buffer);

// S(z), exact for exponents in [-n_max, K]. Throws Error(TruncationTooSmall)
// for K < -n_max.
//
// For s < r the i-th term carries (-1)^{(r-s)(1+n_i)} and the second factor
// is taken at (-1)^{r-s} z.
LaurentSeries lhs_series(const IdentityInstance &inst, int K);

// The z^k coefficient of S through the gamma closed form, for
// -n_max <= k <= -m_min - 1. Throws Error(KOutOfAlphaRange) otherwise.
Rational alpha_coeff(const IdentityInstance &inst, int k);

// Sign relating the z^k coefficient of S to sum_i sum_j gamma^{k+n_i}_{i,j}.
Rational series_sign(const IdentityInstance &inst, int k);

// Throws Error(SupportViolation) if any coefficient that must vanish does not.
BetaTable beta_coefficients(const IdentityInstance &inst, int buffer = default_buffer);

// Validation errors propagate; every later failure is recorded in the report.
VerificationReport verify(const IdentityInstance &inst, int buffer = default_buffer);

// The three routes to the z^k coefficient of S for k >= -m_min.
struct ResidueCheck {
    int k = 0;
    Rational residue_sum;
    Rational c_minus_one;
    Rational gamma_sum;
    Rational series_coefficient; // already multiplied by series_sign(k)
    bool degree_ok = false;

    bool agree() const
    {
        return degree_ok && residue_sum == c_minus_one && c_minus_one == gamma_sum && gamma_sum == series_coefficient;
    }
};

ResidueCheck residue_check(const IdentityInstance &inst, int k);
// Reuses an already computed S(z); series.truncation() must reach k.
ResidueCheck residue_check(const IdentityInstance &inst, int k, const LaurentSeries &series);

} // namespace hypsum

#endif
