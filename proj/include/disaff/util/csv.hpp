#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace disaff::util {

/// Splits one RFC 4180 record. Quoted fields may contain the delimiter and
/// doubled quotes; embedded newlines are not supported. Returns nullopt on an
/// unterminated quote or stray text after a closing quote.
inline std::optional<std::vector<std::string>> split_csv(std::string_view line, char delim = ',') {
    std::vector<std::string> fields;
    std::string cur;
    std::size_t i = 0;
    const std::size_t n = line.size();
    while (true) {
        cur.clear();
        if (i < n && line[i] == '"') {
            ++i;
            bool closed = false;
            while (i < n) {
                if (line[i] == '"') {
                    if (i + 1 < n && line[i + 1] == '"') {
                        cur.push_back('"');
                        i += 2;
                    } else {
                        ++i;
                        closed = true;
                        break;
                    }
                } else {
                    cur.push_back(line[i++]);
                }
            }
            if (!closed) return std::nullopt;
            if (i < n && line[i] != delim) return std::nullopt;
        } else {
            while (i < n && line[i] != delim) cur.push_back(line[i++]);
        }
        fields.push_back(cur);
        if (i >= n) break;
        ++i;  // delimiter
    }
    return fields;
}

inline std::string quote_csv(std::string_view field, char delim = ',') {
    const bool needs = field.find_first_of(std::string{delim} + "\"\r\n") != std::string_view::npos ||
                       (!field.empty() && (field.front() == ' ' || field.back() == ' ' || field.front() == '#'));
    if (!needs) return std::string{field};
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

inline std::string join_csv(const std::vector<std::string>& fields, char delim = ',') {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out.push_back(delim);
        out += quote_csv(fields[i], delim);
    }
    return out;
}

/// Line reader that tracks 1-based line numbers, strips a trailing CR and
/// skips blank lines and `#` comment lines (our output headers).
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::string& line) {
        while (std::getline(in_, line)) {
            ++number_;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line.front() == '#') continue;
            return true;
        }
        return false;
    }

    std::size_t line_number() const noexcept { return number_; }

private:
    std::istream& in_;
    std::size_t number_ = 0;
};

}  // namespace disaff::util
