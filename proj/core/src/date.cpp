#include "crashrisk/date.hpp"

#include <cctype>
#include <chrono>
#include <cstdio>

#include "crashrisk/errors.hpp"

namespace crashrisk {

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
    for (size_t i = from; i < to; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Date Date::from_iso(const std::string& text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-' ||
        !all_digits(text, 0, 4) || !all_digits(text, 5, 7) || !all_digits(text, 8, 10)) {
        throw ValidationError("bad date '" + text + "': expected YYYY-MM-DD");
    }
    const int y = std::stoi(text.substr(0, 4));
    const int m = std::stoi(text.substr(5, 2));
    const int d = std::stoi(text.substr(8, 2));
    return from_ymd(y, m, d);
}

Date Date::from_ymd(int year, int month, int day) {
    using namespace std::chrono;
    const year_month_day ymd{std::chrono::year{year}, std::chrono::month{unsigned(month)},
                             std::chrono::day{unsigned(day)}};
    if (!ymd.ok()) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
        throw ValidationError(std::string("invalid calendar date ") + buf);
    }
    return Date(static_cast<std::int32_t>(sys_days(ymd).time_since_epoch().count()));
}

std::string Date::to_iso() const {
    using namespace std::chrono;
    const year_month_day ymd{sys_days{days{serial_}}};
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", int(ymd.year()), unsigned(ymd.month()),
                  unsigned(ymd.day()));
    return buf;
}

bool Date::is_weekday() const {
    using namespace std::chrono;
    const weekday wd{sys_days{days{serial_}}};
    return wd != Saturday && wd != Sunday;
}

}  // namespace crashrisk
