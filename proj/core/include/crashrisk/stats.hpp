#pragma once

#include <span>
#include <vector>

namespace crashrisk {

struct DescriptiveStats {
    std::size_t n = 0;
    double mean = 0.0;
    double min = 0.0;
    double max = 0.0;
    double std = 0.0;       // sample standard deviation, n-1 denominator
    double skewness = 0.0;  // NaN when std == 0 (undefined for constant data)
};

/// Moment skewness convention: g1 = m3 / m2^(3/2) with 1/n central moments.
/// `bias_corrected` switches to G1 = g1 * sqrt(n(n-1)) / (n-2).
DescriptiveStats descriptive_stats(std::span<const double> values, bool bias_corrected = false);

struct WelchResult {
    double t = 0.0;
    double p_value = 1.0;  // two-sided
    double df = 0.0;       // Welch-Satterthwaite
};

/// Unequal-variance two-sample t-test. Both samples need length >= 2 and
/// positive variance.
WelchResult welch_t_test(std::span<const double> a, std::span<const double> b);

// Distribution tails used by the test statistics.
double student_t_sf(double t, double df);        // P(T > t)
double fisher_f_sf(double f, double d1, double d2);  // P(F > f)

}  // namespace crashrisk
