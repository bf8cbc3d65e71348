#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "crashrisk/date.hpp"

namespace crashrisk {

/// A date-indexed value column to be aligned onto trading days.
/// Dates are strictly ascending; NaN marks a missing value at a covered date.
struct CalendarSeries {
    std::vector<Date> dates;
    std::vector<double> values;
};

enum class AlignMode {
    /// Read the value at the trading day's own calendar date.
    sample,
    /// Sum values over the calendar interval since the previous trading day
    /// (exclusive, inclusive]. For telescoping log growth this equals the
    /// growth between counts sampled on trading dates, so weekend growth
    /// accrues to Monday. The first trading day reads its own date only.
    accumulate,
};

struct AlignRequest {
    std::string label;
    CalendarSeries series;
    AlignMode mode = AlignMode::sample;
    std::vector<int> lags = {0};  // trading-day lags to materialize
};

/// Trading-day-aligned columnar table. Missing values are NaN.
class AlignedPanel {
public:
    AlignedPanel() = default;
    explicit AlignedPanel(std::vector<Date> trading_days);

    const std::vector<Date>& dates() const { return dates_; }
    std::size_t rows() const { return dates_.size(); }

    bool has_column(const std::string& label) const;
    /// Throws ValidationError on unknown label.
    const std::vector<double>& column(const std::string& label) const;
    std::vector<std::string> labels() const;

    void add_column(std::string label, std::vector<double> values);
    /// Materializes `parent` shifted by `lag` trading days under the
    /// conventional label. Throws when the lag exceeds available history.
    void add_lagged(const std::string& parent, int lag);
    /// Elementwise product column of two existing columns.
    void add_interaction(const std::string& label, const std::string& a, const std::string& b);

    /// True per row when none of the requested columns is NaN there.
    std::vector<bool> usable_rows(std::span<const std::string> labels) const;

    /// "skew" at lag 0, "skew_lag2" at lag 2.
    static std::string lag_label(const std::string& base, int lag);

private:
    std::vector<Date> dates_;
    std::map<std::string, std::vector<double>> columns_;
};

/// Aligns calendar series onto the trading-day grid and materializes the
/// requested lags (measured in trading days).
AlignedPanel align_panel(std::vector<Date> trading_days,
                         const std::vector<AlignRequest>& requests);

}  // namespace crashrisk
