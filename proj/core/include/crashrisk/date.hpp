#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace crashrisk {

/// Calendar date stored as days since 1970-01-01.
class Date {
public:
    Date() = default;
    explicit constexpr Date(std::int32_t serial) : serial_(serial) {}

    /// Parses "YYYY-MM-DD". Throws ValidationError on anything else.
    static Date from_iso(const std::string& text);
    static Date from_ymd(int year, int month, int day);

    std::string to_iso() const;
    constexpr std::int32_t serial() const { return serial_; }

    /// Monday..Friday.
    bool is_weekday() const;

    constexpr Date operator+(std::int32_t days) const { return Date(serial_ + days); }
    constexpr Date operator-(std::int32_t days) const { return Date(serial_ - days); }
    constexpr std::int32_t operator-(Date other) const { return serial_ - other.serial_; }
    auto operator<=>(const Date&) const = default;

private:
    std::int32_t serial_ = 0;
};

}  // namespace crashrisk
