#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace riskstrat {

/// Proleptic Gregorian calendar date.
struct Date {
    int year = 1970;
    int month = 1;  // 1..12
    int day = 1;    // 1..31

    auto operator<=>(const Date&) const = default;
};

bool is_valid_date(int year, int month, int day);

/// Strict "YYYY-MM-DD"; rejects anything else (wrong width, bad separators,
/// out-of-range fields, impossible calendar days).
std::optional<Date> parse_date(std::string_view text);

/// Days since 1970-01-01 (negative before the epoch).
std::int64_t days_from_epoch(const Date& d);

Date date_from_epoch_days(std::int64_t days);

/// "YYYY-MM-DD"
std::string format_date(const Date& d);

/// Whole days from `from` to `to` (positive when `to` is later).
std::int64_t days_between(const Date& from, const Date& to);

Date add_days(const Date& d, std::int64_t days);

}  // namespace riskstrat
