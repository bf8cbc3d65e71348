#include "crashrisk/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>

#include "crashrisk/errors.hpp"

namespace crashrisk {

VolumeSeries VolumeSeries::create(std::vector<Date> dates, std::vector<double> volumes) {
    if (dates.size() != volumes.size()) {
        throw ValidationError("volume series: dates and volumes differ in length");
    }
    if (dates.empty()) {
        throw ValidationError("volume series is empty");
    }
    for (std::size_t i = 1; i < dates.size(); ++i) {
        if (dates[i] <= dates[i - 1]) {
            throw ValidationError("volume series dates not strictly increasing at " +
                                  dates[i].to_iso());
        }
    }
    for (std::size_t i = 0; i < volumes.size(); ++i) {
        if (!std::isfinite(volumes[i]) || volumes[i] < 0.0) {
            throw ValidationError("volume must be a finite non-negative number on " +
                                  dates[i].to_iso());
        }
    }
    return VolumeSeries{std::move(dates), std::move(volumes)};
}

VolumeSeries VolumeSeries::extended_back_to(Date start) const {
    if (dates.empty() || start >= dates.front()) return *this;
    const std::int32_t extra = dates.front() - start;
    VolumeSeries out;
    out.dates.reserve(size() + extra);
    out.volumes.reserve(size() + extra);
    for (std::int32_t i = 0; i < extra; ++i) {
        out.dates.push_back(start + i);
        out.volumes.push_back(0.0);
    }
    out.dates.insert(out.dates.end(), dates.begin(), dates.end());
    out.volumes.insert(out.volumes.end(), volumes.begin(), volumes.end());
    return out;
}

namespace {

std::string strip_eol(std::string line) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    return line;
}

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

double parse_double(const std::string& field, std::size_t line_no) {
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ValidationError("line " + std::to_string(line_no) + ": cannot parse number '" +
                              field + "'");
    }
    return value;
}

std::int64_t parse_int(const std::string& field, std::size_t line_no) {
    std::int64_t value = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ValidationError("line " + std::to_string(line_no) + ": cannot parse integer '" +
                              field + "'");
    }
    return value;
}

// Reads a two-column CSV; calls `row(date_text, value_text, line_no)` per row.
template <class RowFn>
void read_two_column(std::istream& in, const std::string& expect_header, RowFn row) {
    std::string line;
    if (!std::getline(in, line)) {
        throw ValidationError("empty input: missing header '" + expect_header + "'");
    }
    if (lower(strip_eol(line)) != expect_header) {
        throw ValidationError("bad header '" + strip_eol(line) + "': expected '" + expect_header +
                              "'");
    }
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_eol(line);
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
            throw ValidationError("line " + std::to_string(line_no) +
                                  ": expected exactly two comma-separated fields");
        }
        row(line.substr(0, comma), line.substr(comma + 1), line_no);
    }
}

template <class T>
void sort_by_date(std::vector<Date>& dates, std::vector<T>& values) {
    std::vector<std::size_t> order(dates.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return dates[a] < dates[b]; });
    std::vector<Date> d;
    std::vector<T> v;
    d.reserve(dates.size());
    v.reserve(values.size());
    for (std::size_t i : order) {
        d.push_back(dates[i]);
        v.push_back(values[i]);
    }
    dates = std::move(d);
    values = std::move(v);
}

}  // namespace

ReturnSeries load_return_csv(std::istream& in) {
    std::vector<Date> dates;
    std::vector<double> values;
    read_two_column(in, "date,return", [&](const std::string& d, const std::string& v,
                                           std::size_t line_no) {
        try {
            dates.push_back(Date::from_iso(d));
        } catch (const ValidationError& e) {
            throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
        }
        values.push_back(parse_double(v, line_no));
    });
    sort_by_date(dates, values);
    return ReturnSeries::create(std::move(dates), std::move(values));
}

CountSeries load_count_csv(std::istream& in) {
    std::vector<Date> dates;
    std::vector<std::int64_t> counts;
    read_two_column(in, "date,count", [&](const std::string& d, const std::string& v,
                                          std::size_t line_no) {
        try {
            dates.push_back(Date::from_iso(d));
        } catch (const ValidationError& e) {
            throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
        }
        counts.push_back(parse_int(v, line_no));
    });
    sort_by_date(dates, counts);
    return CountSeries::create(std::move(dates), std::move(counts));
}

VolumeSeries load_volume_csv(std::istream& in) {
    std::vector<Date> dates;
    std::vector<double> volumes;
    read_two_column(in, "date,volume", [&](const std::string& d, const std::string& v,
                                           std::size_t line_no) {
        try {
            dates.push_back(Date::from_iso(d));
        } catch (const ValidationError& e) {
            throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
        }
        volumes.push_back(parse_double(v, line_no));
    });
    sort_by_date(dates, volumes);
    return VolumeSeries::create(std::move(dates), std::move(volumes));
}

namespace {

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open file: " + path);
    return in;
}

}  // namespace

ReturnSeries load_return_file(const std::string& path) {
    auto in = open_or_throw(path);
    try {
        return load_return_csv(in);
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

CountSeries load_count_file(const std::string& path) {
    auto in = open_or_throw(path);
    try {
        return load_count_csv(in);
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

VolumeSeries load_volume_file(const std::string& path) {
    auto in = open_or_throw(path);
    try {
        return load_volume_csv(in);
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

}  // namespace crashrisk
