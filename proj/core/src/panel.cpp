#include "crashrisk/panel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "crashrisk/errors.hpp"

namespace crashrisk {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

AlignedPanel::AlignedPanel(std::vector<Date> trading_days) : dates_(std::move(trading_days)) {
    for (std::size_t i = 1; i < dates_.size(); ++i) {
        if (dates_[i] <= dates_[i - 1]) {
            throw ValidationError("trading days not strictly increasing at " +
                                  dates_[i].to_iso());
        }
    }
}

bool AlignedPanel::has_column(const std::string& label) const {
    return columns_.count(label) > 0;
}

const std::vector<double>& AlignedPanel::column(const std::string& label) const {
    const auto it = columns_.find(label);
    if (it == columns_.end()) throw ValidationError("unknown column '" + label + "'");
    return it->second;
}

std::vector<std::string> AlignedPanel::labels() const {
    std::vector<std::string> out;
    out.reserve(columns_.size());
    for (const auto& [label, _] : columns_) out.push_back(label);
    return out;
}

void AlignedPanel::add_column(std::string label, std::vector<double> values) {
    if (values.size() != dates_.size()) {
        throw ValidationError("column '" + label + "' has " + std::to_string(values.size()) +
                              " rows, panel has " + std::to_string(dates_.size()));
    }
    columns_[std::move(label)] = std::move(values);
}

std::string AlignedPanel::lag_label(const std::string& base, int lag) {
    return lag == 0 ? base : base + "_lag" + std::to_string(lag);
}

void AlignedPanel::add_lagged(const std::string& parent, int lag) {
    if (lag < 0) throw ValidationError("negative lag for column '" + parent + "'");
    if (static_cast<std::size_t>(lag) >= rows()) {
        throw ValidationError("lag " + std::to_string(lag) + " of '" + parent +
                              "' exceeds available history (" + std::to_string(rows()) +
                              " trading days)");
    }
    const auto& base = column(parent);
    if (lag == 0) return;
    std::vector<double> shifted(rows(), kNaN);
    for (std::size_t i = lag; i < rows(); ++i) shifted[i] = base[i - lag];
    columns_[lag_label(parent, lag)] = std::move(shifted);
}

void AlignedPanel::add_interaction(const std::string& label, const std::string& a,
                                   const std::string& b) {
    const auto& ca = column(a);
    const auto& cb = column(b);
    std::vector<double> prod(rows());
    for (std::size_t i = 0; i < rows(); ++i) {
        prod[i] = (std::isnan(ca[i]) || std::isnan(cb[i])) ? kNaN : ca[i] * cb[i];
    }
    columns_[label] = std::move(prod);
}

std::vector<bool> AlignedPanel::usable_rows(std::span<const std::string> labels) const {
    std::vector<bool> usable(rows(), true);
    for (const auto& label : labels) {
        const auto& col = column(label);
        for (std::size_t i = 0; i < rows(); ++i) {
            if (std::isnan(col[i])) usable[i] = false;
        }
    }
    return usable;
}

namespace {

// Lag-0 alignment of one calendar series onto the trading grid.
std::vector<double> align_base(const std::vector<Date>& trading, const CalendarSeries& series,
                               AlignMode mode) {
    for (std::size_t i = 1; i < series.dates.size(); ++i) {
        if (series.dates[i] <= series.dates[i - 1]) {
            throw ValidationError("calendar series dates not strictly increasing at " +
                                  series.dates[i].to_iso());
        }
    }
    std::vector<double> out(trading.size(), kNaN);
    if (mode == AlignMode::sample) {
        for (std::size_t i = 0; i < trading.size(); ++i) {
            const auto it =
                std::lower_bound(series.dates.begin(), series.dates.end(), trading[i]);
            if (it != series.dates.end() && *it == trading[i]) {
                out[i] = series.values[it - series.dates.begin()];
            }
        }
        return out;
    }
    // accumulate: sum over (previous trading day, this trading day]
    for (std::size_t i = 0; i < trading.size(); ++i) {
        const Date lo = (i == 0) ? trading[i] : trading[i - 1] + 1;
        const Date hi = trading[i];
        const auto first = std::lower_bound(series.dates.begin(), series.dates.end(), lo);
        const auto last = std::upper_bound(series.dates.begin(), series.dates.end(), hi);
        if (first == last) continue;  // nothing covered -> missing
        double sum = 0.0;
        for (auto it = first; it != last; ++it) {
            sum += series.values[it - series.dates.begin()];
        }
        out[i] = sum;  // NaN propagates from any missing day in the interval
    }
    return out;
}

}  // namespace

AlignedPanel align_panel(std::vector<Date> trading_days,
                         const std::vector<AlignRequest>& requests) {
    AlignedPanel panel(std::move(trading_days));
    for (const auto& req : requests) {
        panel.add_column(req.label, align_base(panel.dates(), req.series, req.mode));
        for (int lag : req.lags) {
            panel.add_lagged(req.label, lag);
        }
    }
    return panel;
}

}  // namespace crashrisk
