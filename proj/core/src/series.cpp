#include "crashrisk/series.hpp"

#include <cmath>
#include <limits>

#include "crashrisk/errors.hpp"

namespace crashrisk {

ReturnSeries ReturnSeries::create(std::vector<Date> dates, std::vector<double> values) {
    if (dates.size() != values.size()) {
        throw ValidationError("return series: dates and values differ in length");
    }
    if (dates.size() < 2) {
        throw ValidationError("return series too short: need at least 2 observations, got " +
                              std::to_string(dates.size()));
    }
    for (std::size_t i = 1; i < dates.size(); ++i) {
        if (dates[i] == dates[i - 1]) {
            throw ValidationError("duplicate date " + dates[i].to_iso());
        }
        if (dates[i] < dates[i - 1]) {
            throw ValidationError("dates out of order at " + dates[i].to_iso());
        }
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            throw ValidationError("non-finite return on " + dates[i].to_iso());
        }
    }
    return ReturnSeries{std::move(dates), std::move(values)};
}

CountSeries CountSeries::create(std::vector<Date> dates, std::vector<std::int64_t> counts) {
    if (dates.size() != counts.size()) {
        throw ValidationError("count series: dates and counts differ in length");
    }
    if (dates.empty()) {
        throw ValidationError("count series is empty");
    }
    for (std::size_t i = 1; i < dates.size(); ++i) {
        if (dates[i] - dates[i - 1] != 1) {
            throw ValidationError("calendar gap between " + dates[i - 1].to_iso() + " and " +
                                  dates[i].to_iso() + ": count series must be daily");
        }
    }
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] < 0) {
            throw ValidationError("negative count " + std::to_string(counts[i]) + " on " +
                                  dates[i].to_iso());
        }
    }
    return CountSeries{std::move(dates), std::move(counts)};
}

CountSeries CountSeries::extended_back_to(Date start) const {
    if (dates.empty() || start >= dates.front()) return *this;
    const std::int32_t extra = dates.front() - start;
    CountSeries out;
    out.dates.reserve(size() + extra);
    out.counts.reserve(size() + extra);
    for (std::int32_t i = 0; i < extra; ++i) {
        out.dates.push_back(start + i);
        out.counts.push_back(0);
    }
    out.dates.insert(out.dates.end(), dates.begin(), dates.end());
    out.counts.insert(out.counts.end(), counts.begin(), counts.end());
    return out;
}

GrowthSeries log_growth(const CountSeries& counts, ZeroPolicy policy) {
    if (counts.size() < 2) {
        throw ValidationError("count series too short for growth rates: need at least 2 days");
    }
    GrowthSeries out;
    out.dates.assign(counts.dates.begin() + 1, counts.dates.end());
    out.values.reserve(counts.size() - 1);
    for (std::size_t i = 1; i < counts.size(); ++i) {
        const double prev = static_cast<double>(counts.counts[i - 1]);
        const double cur = static_cast<double>(counts.counts[i]);
        if (policy == ZeroPolicy::log1p) {
            out.values.push_back(std::log1p(cur) - std::log1p(prev));
        } else if (prev == 0.0 || cur == 0.0) {
            out.values.push_back(std::numeric_limits<double>::quiet_NaN());
        } else {
            out.values.push_back(std::log(cur) - std::log(prev));
        }
    }
    return out;
}

}  // namespace crashrisk
