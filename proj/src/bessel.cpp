#include <hypsum/bessel.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>

#include <hypsum/error.hpp>

namespace hypsum
{

long double bessel_j_series(long double nu, long double x, int order)
{
    const long double w = -x * x / 4.0L;
    long double term = 1.0L;
    long double sum = 1.0L;
    for (int k = 0; k < order; ++k) {
        term *= w / ((nu + 1.0L + k) * (k + 1.0L));
        sum += term;
    }
    return std::pow(x / 2.0L, nu) / std::tgamma(nu + 1.0L) * sum;
}

long double bessel_wronskian_lhs(long double nu, int m, long double x, int order)
{
    const long double sign = (std::abs(m) % 2 == 0) ? 1.0L : -1.0L;
    return sign * bessel_j_series(-nu, x, order) * bessel_j_series(nu + m, x, order)
           - bessel_j_series(nu, x, order) * bessel_j_series(-nu - m, x, order);
}

IdentityInstance bessel_instance(const Rational &nu, int m_shift)
{
    return IdentityInstance{{Rational(0), nu}, {}, {}, {0, m_shift}};
}

BesselReport bessel_report(const Rational &nu, int m_shift, int order, const std::vector<long double> &samples,
                           long double tolerance)
{
    if (order < 1) {
        throw Error(ErrorKind::InvalidArgument, "series order must be positive");
    }
    if (!(tolerance > 0)) {
        throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
    }
    for (long double x : samples) {
        if (!(x > 0)) {
            throw Error(ErrorKind::InvalidArgument, "sample points must be positive");
        }
    }
    // Both 0F1 lower parameters 1 + nu and 1 + nu + m must be admissible.
    if ((nu.is_integer() && nu.sign() < 0) || ((nu + Rational(m_shift)).is_integer() && (nu + Rational(m_shift)).sign() < 0)) {
        throw Error(ErrorKind::BadLowerParameter, "nu and nu + m must not be negative integers");
    }

    BesselReport report;
    report.nu = nu;
    report.m_shift = m_shift;
    report.order = order;
    report.tolerance = tolerance;
    report.exact = verify(bessel_instance(nu, m_shift));

    const int am = std::abs(m_shift);
    report.degree_bound = am == 0 ? -1 : (am - 1) / 2;
    if (static_cast<int>(samples.size()) < report.degree_bound + 2) {
        throw Error(ErrorKind::InvalidArgument, "need at least " + std::to_string(report.degree_bound + 2)
                                                    + " samples to test the degree bound");
    }

    const long double nu_f = nu.to_long_double();
    std::vector<long double> t;
    std::vector<long double> dd;
    for (long double x : samples) {
        const long double y = std::pow(x, static_cast<long double>(am)) * bessel_wronskian_lhs(nu_f, m_shift, x, order);
        report.samples.push_back({x, y});
        report.scale = std::max(report.scale, std::fabs(y));
        t.push_back(x * x);
        dd.push_back(y);
    }
    const long double bound = tolerance * (report.scale > 0 ? report.scale : 1.0L);

    // In-place divided-difference table; after pass q, dd[i] holds
    // f[t_{i-q}, ..., t_i].
    const int count = static_cast<int>(dd.size());
    for (int q = 0; q < count; ++q) {
        if (q > 0) {
            for (int i = count - 1; i >= q; --i) {
                dd[static_cast<std::size_t>(i)] = (dd[static_cast<std::size_t>(i)] - dd[static_cast<std::size_t>(i - 1)])
                                                  / (t[static_cast<std::size_t>(i)] - t[static_cast<std::size_t>(i - q)]);
            }
        }
        if (q <= report.degree_bound) {
            continue;
        }
        for (int i = q; i < count; ++i) {
            const long double v = std::fabs(dd[static_cast<std::size_t>(i)]);
            report.residual = std::max(report.residual, v);
            if (v > bound && report.offending_sample < 0) {
                report.offending_sample = i;
            }
        }
    }
    return report;
}

BesselReport bessel_demo(const Rational &nu, int m_shift, int order, const std::vector<long double> &samples,
                         long double tolerance)
{
    BesselReport report = bessel_report(nu, m_shift, order, samples, tolerance);
    if (!report.numeric_ok()) {
        std::ostringstream msg;
        msg << "divided-difference residual " << static_cast<double>(report.residual) << " exceeds "
            << static_cast<double>(report.tolerance) << " x " << static_cast<double>(report.scale) << " at sample x = "
            << static_cast<double>(report.samples[static_cast<std::size_t>(report.offending_sample)].x);
        throw Error(ErrorKind::NumericResidualExceeded, msg.str());
    }
    return report;
}

} // namespace hypsum
