#include "crashrisk/sentiment.hpp"

#include <algorithm>
#include <cmath>

#include "crashrisk/errors.hpp"

namespace crashrisk {

double fear_sentiment(double volume) {
    if (!std::isfinite(volume) || volume < 0.0) {
        throw ValidationError("search volume must be finite and non-negative");
    }
    return std::log1p(volume);
}

std::vector<double> fear_dummy(std::span<const Date> dates, std::span<const double> volumes,
                               DateRange reference_window) {
    if (dates.size() != volumes.size()) {
        throw ValidationError("fear dummy: dates and volumes differ in length");
    }
    std::vector<double> window;
    for (std::size_t i = 0; i < dates.size(); ++i) {
        if (reference_window.contains(dates[i])) window.push_back(volumes[i]);
    }
    if (window.empty()) {
        throw ValidationError("fear dummy reference window " + reference_window.first.to_iso() +
                              ".." + reference_window.last.to_iso() + " selects no observations");
    }
    std::sort(window.begin(), window.end());
    const std::size_t n = window.size();
    const double median =
        (n % 2 == 1) ? window[n / 2] : 0.5 * (window[n / 2 - 1] + window[n / 2]);
    std::vector<double> dummy(volumes.size());
    for (std::size_t i = 0; i < volumes.size(); ++i) {
        dummy[i] = volumes[i] > median ? 1.0 : 0.0;
    }
    return dummy;
}

SentimentSeries make_sentiment(const VolumeSeries& volumes,
                               std::optional<DateRange> reference_window) {
    DateRange window{};
    if (reference_window) {
        window = *reference_window;
    } else {
        const DateRange y2020{Date::from_ymd(2020, 1, 1), Date::from_ymd(2020, 12, 31)};
        const bool covers_2020 = !volumes.dates.empty() &&
                                 volumes.dates.front() <= y2020.last &&
                                 volumes.dates.back() >= y2020.first;
        window = covers_2020 ? y2020 : DateRange{volumes.dates.front(), volumes.dates.back()};
    }
    SentimentSeries out;
    out.dates = volumes.dates;
    out.fear_sent.reserve(volumes.size());
    for (double v : volumes.volumes) out.fear_sent.push_back(fear_sentiment(v));
    out.d_fear = fear_dummy(volumes.dates, volumes.volumes, window);
    return out;
}

}  // namespace crashrisk
