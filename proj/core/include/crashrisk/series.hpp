#pragma once

#include <cstdint>
#include <vector>

#include "crashrisk/date.hpp"

namespace crashrisk {

/// Daily market returns on trading days, strictly ascending dates.
struct ReturnSeries {
    std::vector<Date> dates;
    std::vector<double> values;

    /// Validates and returns the series. Throws ValidationError on
    /// length < 2, unordered/duplicate dates, or non-finite values.
    static ReturnSeries create(std::vector<Date> dates, std::vector<double> values);

    std::size_t size() const { return dates.size(); }
};

/// Daily counts on consecutive calendar days (gap of exactly one day).
struct CountSeries {
    std::vector<Date> dates;
    std::vector<std::int64_t> counts;

    static CountSeries create(std::vector<Date> dates, std::vector<std::int64_t> counts);

    std::size_t size() const { return dates.size(); }

    /// Prepends zero-count days so coverage starts at `start`.
    /// No-op when the series already starts on or before `start`.
    CountSeries extended_back_to(Date start) const;
};

/// Log growth rates derived from a CountSeries; one fewer element than
/// its source. Values may be NaN under the `skip` zero policy.
struct GrowthSeries {
    std::vector<Date> dates;
    std::vector<double> values;

    std::size_t size() const { return dates.size(); }
};

enum class ZeroPolicy {
    log1p,  // ln(c_t + 1) - ln(c_{t-1} + 1); always finite
    skip,   // ln(c_t) - ln(c_{t-1}); pairs touching a zero become NaN
};

/// Per-day log growth of a count series.
GrowthSeries log_growth(const CountSeries& counts, ZeroPolicy policy = ZeroPolicy::log1p);

}  // namespace crashrisk
