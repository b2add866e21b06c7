#pragma once

#include <charconv>
#include <chrono>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

namespace disaff {

/// Calendar day (UTC).
using Date = std::chrono::sys_days;
/// Instant with one-second resolution (UTC).
using Timestamp = std::chrono::sys_seconds;

namespace util {

namespace detail {

inline bool read_int(std::string_view s, std::size_t pos, std::size_t len, int& out) {
    if (pos + len > s.size()) return false;
    for (std::size_t i = pos; i < pos + len; ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
    }
    const auto* first = s.data() + pos;
    return std::from_chars(first, first + len, out).ec == std::errc{};
}

inline std::optional<Date> make_date(int y, int m, int d) {
    const std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(m)},
                                          std::chrono::day{static_cast<unsigned>(d)}};
    if (!ymd.ok()) return std::nullopt;
    return Date{ymd};
}

}  // namespace detail

/// Parses exactly `YYYY-MM-DD`.
inline std::optional<Date> parse_date(std::string_view s) {
    int y = 0, m = 0, d = 0;
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
    if (!detail::read_int(s, 0, 4, y) || !detail::read_int(s, 5, 2, m) || !detail::read_int(s, 8, 2, d)) {
        return std::nullopt;
    }
    return detail::make_date(y, m, d);
}

/// ISO-8601 date-time: `YYYY-MM-DD[T ]HH:MM[:SS[.fff]][Z|+HH:MM|+HHMM|-...]`.
/// A missing zone designator means UTC. Fractional seconds are truncated.
inline std::optional<Timestamp> parse_timestamp(std::string_view s) {
    if (s.size() < 16) return std::nullopt;
    const auto date = parse_date(s.substr(0, 10));
    if (!date || (s[10] != 'T' && s[10] != ' ')) return std::nullopt;
    int hh = 0, mm = 0, ss = 0;
    if (!detail::read_int(s, 11, 2, hh) || s[13] != ':' || !detail::read_int(s, 14, 2, mm)) return std::nullopt;
    std::size_t pos = 16;
    if (pos < s.size() && s[pos] == ':') {
        if (!detail::read_int(s, pos + 1, 2, ss)) return std::nullopt;
        pos += 3;
        if (pos < s.size() && s[pos] == '.') {
            ++pos;
            const std::size_t start = pos;
            while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
            if (pos == start) return std::nullopt;
        }
    }
    if (hh > 23 || mm > 59 || ss > 60) return std::nullopt;
    int offset_minutes = 0;
    if (pos < s.size()) {
        const char z = s[pos];
        if (z == 'Z' && pos + 1 == s.size()) {
            pos += 1;
        } else if (z == '+' || z == '-') {
            int oh = 0, om = 0;
            if (!detail::read_int(s, pos + 1, 2, oh)) return std::nullopt;
            std::size_t mpos = pos + 3;
            if (mpos < s.size() && s[mpos] == ':') ++mpos;
            if (!detail::read_int(s, mpos, 2, om) || mpos + 2 != s.size() || oh > 23 || om > 59) return std::nullopt;
            offset_minutes = (z == '+' ? 1 : -1) * (oh * 60 + om);
            pos = s.size();
        } else {
            return std::nullopt;
        }
    }
    if (pos != s.size()) return std::nullopt;
    using namespace std::chrono;
    return Timestamp{*date} + hours{hh} + minutes{mm} + seconds{ss} - minutes{offset_minutes};
}

inline std::string format_date(Date d) {
    const std::chrono::year_month_day ymd{d};
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                  static_cast<unsigned>(ymd.day()));
    return buf;
}

/// Canonical form `YYYY-MM-DDTHH:MM:SSZ`.
inline std::string format_timestamp(Timestamp t) {
    const auto day = std::chrono::floor<std::chrono::days>(t);
    const std::chrono::hh_mm_ss tod{t - day};
    char buf[16];
    std::snprintf(buf, sizeof buf, "T%02d:%02d:%02dZ", static_cast<int>(tod.hours().count()),
                  static_cast<int>(tod.minutes().count()), static_cast<int>(tod.seconds().count()));
    return format_date(day) + buf;
}

inline Date day_of(Timestamp t) { return std::chrono::floor<std::chrono::days>(t); }

}  // namespace util
}  // namespace disaff
