#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace firerisk {

// Calendar date, ISO-8601 YYYY-MM-DD in all text formats.
struct Date {
    int year = 1970;
    int month = 1;
    int day = 1;

    auto operator<=>(const Date&) const = default;

    std::string to_string() const;

    // Throws ParseError on anything but a valid zero-padded YYYY-MM-DD.
    static Date parse(std::string_view text);

    // Days since 1970-01-01 (proleptic Gregorian). Negative before epoch.
    std::int64_t day_number() const;
};

inline std::int64_t days_between(const Date& from, const Date& to) {
    return to.day_number() - from.day_number();
}

bool is_valid_date(int year, int month, int day);

}  // namespace firerisk
