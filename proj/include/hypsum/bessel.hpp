#ifndef HYPSUM_BESSEL_HPP
#define HYPSUM_BESSEL_HPP

#include <vector>

#include <hypsum/identity.hpp>
#include <hypsum/rational.hpp>

namespace hypsum
{

// J_nu(x) from the 0F1 series truncated after `order` terms past the first.
long double bessel_j_series(long double nu, long double x, int order);

// (-1)^m J_{-nu}(x) J_{nu+m}(x) - J_nu(x) J_{-nu-m}(x).
long double bessel_wronskian_lhs(long double nu, int m, long double x, int order);

// The r = 2, s = 0 instance behind the Bessel identity: a = (0, nu), n = (0, m).
IdentityInstance bessel_instance(const Rational &nu, int m_shift);

struct BesselSample {
    long double x = 0;
    long double scaled = 0; // x^{|m|} * lhs(x)
};

struct BesselReport {
    Rational nu;
    int m_shift = 0;
    int order = 0;
    VerificationReport exact;
    // Largest admissible degree in t = x^2: the largest integer below |m|/2
    // (-1 for m = 0, where the left side vanishes identically).
    int degree_bound = -1;
    std::vector<BesselSample> samples;
    long double residual = 0;
    long double scale = 0;
    long double tolerance = 0;
    int offending_sample = -1;

    bool numeric_ok() const
    {
        return offending_sample < 0;
    }
    bool passed() const
    {
        return exact.passed() && numeric_ok();
    }
};

// Exact layer: verify bessel_instance(nu, m_shift). Numeric layer: x^{|m|}
// times the left side, as a function of t = x^2, must have vanishing divided
// differences above degree_bound (relative to the largest sampled value).
// Returns the full report; use bessel_demo_checked for the throwing variant.
BesselReport bessel_report(const Rational &nu, int m_shift, int order, const std::vector<long double> &samples,
                           long double tolerance);

// Throws Error(NumericResidualExceeded) naming the offending sample.
BesselReport bessel_demo(const Rational &nu, int m_shift, int order, const std::vector<long double> &samples,
                         long double tolerance);

} // namespace hypsum

#endif
