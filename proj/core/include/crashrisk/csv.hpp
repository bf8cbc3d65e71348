#pragma once

#include <istream>
#include <string>
#include <vector>

#include "crashrisk/series.hpp"

namespace crashrisk {

/// Daily search-volume observations, strictly ascending dates, volumes >= 0.
struct VolumeSeries {
    std::vector<Date> dates;
    std::vector<double> volumes;

    static VolumeSeries create(std::vector<Date> dates, std::vector<double> volumes);

    std::size_t size() const { return dates.size(); }

    /// Prepends zero-volume days so coverage starts at `start`.
    VolumeSeries extended_back_to(Date start) const;
};

// CSV loaders. All expect a UTF-8 header line, ISO-8601 dates, '.' decimal
// separator, LF or CRLF line endings. Rows are sorted by date before
// validation; malformed rows report their line number.

/// Header `date,return`.
ReturnSeries load_return_csv(std::istream& in);
/// Header `date,count`; counts must be non-negative integers on
/// consecutive calendar days.
CountSeries load_count_csv(std::istream& in);
/// Header `date,volume`.
VolumeSeries load_volume_csv(std::istream& in);

ReturnSeries load_return_file(const std::string& path);
CountSeries load_count_file(const std::string& path);
VolumeSeries load_volume_file(const std::string& path);

}  // namespace crashrisk
