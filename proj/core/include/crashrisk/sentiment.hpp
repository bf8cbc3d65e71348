#pragma once

#include <optional>
#include <span>
#include <vector>

#include "crashrisk/csv.hpp"
#include "crashrisk/date.hpp"

namespace crashrisk {

/// Fear index and above-median indicator derived from search volumes.
struct SentimentSeries {
    std::vector<Date> dates;
    std::vector<double> fear_sent;  // ln(volume + 1), >= 0
    std::vector<double> d_fear;     // 0 or 1

    std::size_t size() const { return dates.size(); }
};

/// ln(volume + 1). Throws on negative or non-finite volume.
double fear_sentiment(double volume);

struct DateRange {
    Date first;
    Date last;  // inclusive

    bool contains(Date d) const { return first <= d && d <= last; }
};

/// 1 where volume strictly exceeds the median of volumes inside the
/// reference window, else 0. Even window counts use the midpoint of the
/// two central order statistics. Ties at the median map to 0.
std::vector<double> fear_dummy(std::span<const Date> dates, std::span<const double> volumes,
                               DateRange reference_window);

/// Builds fearSent and D_fear from a volume series. When no window is
/// given, uses calendar year 2020 if the data reaches into it, otherwise
/// the full span.
SentimentSeries make_sentiment(const VolumeSeries& volumes,
                               std::optional<DateRange> reference_window = std::nullopt);

}  // namespace crashrisk
