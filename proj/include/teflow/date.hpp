#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace teflow {

// Proleptic Gregorian calendar date. Comparison order is calendar order.
struct Date {
    int year = 0;
    int month = 0; // 1..12
    int day = 0;   // 1..31

    auto operator<=>(const Date&) const = default;

    bool valid() const;

    // Days since 1970-01-01 (negative before the epoch).
    std::int64_t serial() const;
    static Date from_serial(std::int64_t days);

    Date plus_days(std::int64_t days) const { return from_serial(serial() + days); }

    std::string iso() const; // YYYY-MM-DD

    // Parses `text` against a pattern made of %Y, %m, %d and literal
    // characters (e.g. "%Y-%m-%d" or "%d/%m/%Y"). Throws ParseError on
    // mismatch or an impossible calendar date.
    static Date parse(std::string_view text, std::string_view pattern);
};

} // namespace teflow
