#include "teflow/date.hpp"

#include <array>
#include <cstdio>

#include "teflow/error.hpp"

namespace teflow {

namespace {

bool is_leap(int y) {
    return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

int days_in_month(int y, int m) {
    static constexpr std::array<int, 13> d{0, 31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (m == 2 && is_leap(y)) return 29;
    return d[m];
}

} // namespace

bool Date::valid() const {
    if (month < 1 || month > 12) return false;
    if (day < 1 || day > days_in_month(year, month)) return false;
    return true;
}

// Civil-calendar <-> serial-day conversion via era/day-of-era arithmetic.
std::int64_t Date::serial() const {
    const std::int64_t y = year - (month <= 2 ? 1 : 0);
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const std::int64_t yoe = y - era * 400;
    const std::int64_t doy = (153 * (month + (month > 2 ? -3 : 9)) + 2) / 5 + day - 1;
    const std::int64_t doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + doe - 719468;
}

Date Date::from_serial(std::int64_t days) {
    const std::int64_t z = days + 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const std::int64_t doe = z - era * 146097;
    const std::int64_t yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = yoe + era * 400;
    const std::int64_t doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const std::int64_t mp = (5 * doy + 2) / 153;
    const int d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    const int m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    return Date{static_cast<int>(y + (m <= 2 ? 1 : 0)), m, d};
}

std::string Date::iso() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year, month, day);
    return buf;
}

Date Date::parse(std::string_view text, std::string_view pattern) {
    Date out;
    bool have_y = false, have_m = false, have_d = false;
    std::size_t pos = 0;

    auto read_int = [&](int max_digits) -> int {
        int value = 0;
        int digits = 0;
        while (pos < text.size() && digits < max_digits && text[pos] >= '0' && text[pos] <= '9') {
            value = value * 10 + (text[pos] - '0');
            ++pos;
            ++digits;
        }
        if (digits == 0)
            throw ParseError("date '" + std::string(text) + "' does not match pattern '" +
                             std::string(pattern) + "'");
        return value;
    };

    for (std::size_t i = 0; i < pattern.size(); ++i) {
        if (pattern[i] == '%' && i + 1 < pattern.size()) {
            switch (pattern[i + 1]) {
                case 'Y': out.year = read_int(4); have_y = true; break;
                case 'm': out.month = read_int(2); have_m = true; break;
                case 'd': out.day = read_int(2); have_d = true; break;
                default:
                    throw ValidationError("unsupported date pattern directive '%" +
                                          std::string(1, pattern[i + 1]) + "'");
            }
            ++i;
        } else {
            if (pos >= text.size() || text[pos] != pattern[i])
                throw ParseError("date '" + std::string(text) + "' does not match pattern '" +
                                 std::string(pattern) + "'");
            ++pos;
        }
    }

    if (!have_y || !have_m || !have_d)
        throw ValidationError("date pattern '" + std::string(pattern) +
                              "' must contain %Y, %m and %d");
    if (pos != text.size())
        throw ParseError("trailing characters in date '" + std::string(text) + "'");
    if (!out.valid())
        throw ParseError("impossible calendar date '" + std::string(text) + "'");
    return out;
}

} // namespace teflow
