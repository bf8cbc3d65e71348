#include "crashrisk/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <boost/math/distributions/fisher_f.hpp>
#include <boost/math/distributions/students_t.hpp>

#include "crashrisk/errors.hpp"

namespace crashrisk {

DescriptiveStats descriptive_stats(std::span<const double> values, bool bias_corrected) {
    const std::size_t n = values.size();
    if (n < 2) {
        throw ValidationError("descriptive stats need at least 2 observations, got " +
                              std::to_string(n));
    }
    for (double v : values) {
        if (!std::isfinite(v)) throw ValidationError("descriptive stats: non-finite value");
    }
    DescriptiveStats out;
    out.n = n;
    out.min = *std::min_element(values.begin(), values.end());
    out.max = *std::max_element(values.begin(), values.end());

    double sum = 0.0;
    for (double v : values) sum += v;
    out.mean = sum / static_cast<double>(n);

    double m2 = 0.0, m3 = 0.0;
    for (double v : values) {
        const double d = v - out.mean;
        m2 += d * d;
        m3 += d * d * d;
    }
    const double nn = static_cast<double>(n);
    out.std = std::sqrt(m2 / (nn - 1.0));
    m2 /= nn;
    m3 /= nn;
    if (m2 <= 0.0) {
        out.skewness = std::numeric_limits<double>::quiet_NaN();
        out.std = 0.0;
        return out;
    }
    double g1 = m3 / std::pow(m2, 1.5);
    if (bias_corrected && n > 2) {
        g1 *= std::sqrt(nn * (nn - 1.0)) / (nn - 2.0);
    }
    out.skewness = g1;
    return out;
}

namespace {

std::pair<double, double> mean_var(std::span<const double> x) {
    double sum = 0.0;
    for (double v : x) sum += v;
    const double mean = sum / static_cast<double>(x.size());
    double ss = 0.0;
    for (double v : x) ss += (v - mean) * (v - mean);
    return {mean, ss / (static_cast<double>(x.size()) - 1.0)};
}

}  // namespace

WelchResult welch_t_test(std::span<const double> a, std::span<const double> b) {
    if (a.size() < 2 || b.size() < 2) {
        throw ValidationError("welch t-test: both samples need at least 2 observations");
    }
    const auto [ma, va] = mean_var(a);
    const auto [mb, vb] = mean_var(b);
    if (!(va > 0.0) || !(vb > 0.0)) {
        throw ValidationError("welch t-test: zero variance in a sample");
    }
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    const double sa = va / na;
    const double sb = vb / nb;
    WelchResult out;
    out.t = (ma - mb) / std::sqrt(sa + sb);
    out.df = (sa + sb) * (sa + sb) / (sa * sa / (na - 1.0) + sb * sb / (nb - 1.0));
    out.p_value = 2.0 * student_t_sf(std::fabs(out.t), out.df);
    return out;
}

double student_t_sf(double t, double df) {
    const boost::math::students_t dist(df);
    return boost::math::cdf(boost::math::complement(dist, t));
}

double fisher_f_sf(double f, double d1, double d2) {
    if (f <= 0.0) return 1.0;
    const boost::math::fisher_f dist(d1, d2);
    return boost::math::cdf(boost::math::complement(dist, f));
}

}  // namespace crashrisk
