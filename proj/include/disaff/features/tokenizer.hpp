#pragma once

#include <algorithm>
#include <array>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "disaff/error.hpp"
#include "disaff/features/vocabulary.hpp"
#include "disaff/util/utf8.hpp"

namespace disaff::features {

inline constexpr std::string_view kLinkToken = "<link>";

// Emoticon table v1, matched after lowercasing. data/emoticons.txt carries the
// same list; keep the two in sync.
inline constexpr std::array<std::string_view, 44> kDefaultEmoticons = {
    ":)",  ":-)", ":(",  ":-(", ":d",  ":-d", ";)",  ";-)", ":p",  ":-p", ":/",
    ":-/", ":|",  ":-|", ":*",  ":-*", ":o",  ":-o", "xd",  "<3",  "</3", ":')",
    ":'(", "=)",  "=(",  "=d",  "^^",  "^_^", "-_-", ":s",  ":-s", "8)",  "8-)",
    ":]",  ":[",  ":3",  "o_o", ";(",  ":@",  ":$",  "(:",  "):",  ":((", ":))",
};

class EmoticonTable {
public:
    EmoticonTable() : EmoticonTable(std::vector<std::string>(kDefaultEmoticons.begin(), kDefaultEmoticons.end())) {}

    explicit EmoticonTable(std::vector<std::string> entries) {
        for (auto& e : entries) {
            auto lowered = util::decode_utf8(e);
            util::lower_in_place(lowered);
            if (lowered.empty()) continue;
            if (util::is_punct(lowered.front())) suffixable_.push_back(lowered);
            all_.insert(std::move(lowered));
        }
        std::sort(suffixable_.begin(), suffixable_.end(),
                  [](const auto& a, const auto& b) { return a.size() > b.size(); });
    }

    /// One emoticon per line; blank lines and `#` comments ignored.
    static EmoticonTable load(std::istream& in) {
        std::vector<std::string> entries;
        std::string line;
        while (std::getline(in, line)) {
            const auto t = util::trim(line);
            if (t.empty() || t.front() == '#') continue;
            entries.emplace_back(t);
        }
        return EmoticonTable(std::move(entries));
    }

    bool contains(std::u32string_view s) const { return all_.contains(std::u32string{s}); }

    /// Length of the longest emoticon that is a proper suffix of `s` and
    /// starts with punctuation (so words ending in "xd" are left alone).
    std::size_t suffix_length(std::u32string_view s) const {
        for (const auto& e : suffixable_) {
            if (e.size() < s.size() && s.ends_with(e)) return e.size();
        }
        return 0;
    }

    std::size_t size() const noexcept { return all_.size(); }

    static const EmoticonTable& builtin() {
        static const EmoticonTable table;
        return table;
    }

private:
    std::unordered_set<std::u32string> all_;
    std::vector<std::u32string> suffixable_;
};

namespace detail {

inline bool is_url_start(std::u32string_view s) {
    return s.starts_with(U"http://") || s.starts_with(U"https://") || s.starts_with(U"www.");
}

/// Handle characters: anything that is neither space nor punctuation, plus '_'.
inline bool is_handle_char(char32_t c) { return c == U'_' || !(util::is_punct(c) || util::is_space(c)); }

inline void emit(TokenList& out, std::u32string_view s) {
    if (!s.empty()) out.push_back(util::encode_utf8(s));
}

inline void tokenize_chunk(std::u32string_view chunk, const EmoticonTable& emoticons, TokenList& out) {
    std::u32string_view rest = chunk;
    while (!rest.empty()) {
        if (is_url_start(rest)) {
            out.emplace_back(kLinkToken);
            return;
        }
        if (emoticons.contains(rest)) {
            emit(out, rest);
            return;
        }
        if (rest.front() == U'@' && rest.size() > 1 && is_handle_char(rest[1])) {
            std::size_t end = 1;
            while (end < rest.size() && is_handle_char(rest[end])) ++end;
            emit(out, rest.substr(0, end));
            rest.remove_prefix(end);
            continue;
        }
        if (!util::is_punct(rest.front())) break;
        emit(out, rest.substr(0, 1));
        rest.remove_prefix(1);
    }
    if (rest.empty()) return;

    std::vector<std::u32string_view> trailing;
    while (!rest.empty()) {
        if (emoticons.contains(rest)) break;
        if (const auto n = emoticons.suffix_length(rest); n > 0) {
            trailing.push_back(rest.substr(rest.size() - n));
            rest.remove_suffix(n);
        } else if (util::is_punct(rest.back())) {
            trailing.push_back(rest.substr(rest.size() - 1));
            rest.remove_suffix(1);
        } else {
            break;
        }
    }
    emit(out, rest);
    for (auto it = trailing.rbegin(); it != trailing.rend(); ++it) emit(out, *it);
}

}  // namespace detail

/// Word tokenizer for tweets: lowercase, split on whitespace, peel leading
/// and trailing punctuation into one-character tokens. Emoticons from the
/// table stay whole, URLs become "<link>", @-mentions stay single tokens.
inline TokenList tokenize_words(std::string_view text, const EmoticonTable& emoticons = EmoticonTable::builtin()) {
    auto cps = util::decode_utf8(text);
    util::lower_in_place(cps);
    TokenList out;
    std::u32string_view view{cps};
    std::size_t i = 0;
    while (i < view.size()) {
        while (i < view.size() && util::is_space(view[i])) ++i;
        const std::size_t start = i;
        while (i < view.size() && !util::is_space(view[i])) ++i;
        if (i > start) detail::tokenize_chunk(view.substr(start, i - start), emoticons, out);
    }
    return out;
}

/// Overlapping windows of `n` code points over the lowercased text, spaces
/// and punctuation included, no padding. Every whitespace character counts
/// as a plain space.
inline TokenList char_ngrams(std::string_view text, std::size_t n = 5) {
    if (n == 0) throw ValidationError("char_ngrams: n must be >= 1");
    auto cps = util::decode_utf8(text);
    for (auto& c : cps) c = util::is_space(c) ? U' ' : util::to_lower(c);
    TokenList out;
    if (cps.size() < n) return out;
    out.reserve(cps.size() - n + 1);
    std::u32string_view view{cps};
    for (std::size_t i = 0; i + n <= view.size(); ++i) out.push_back(util::encode_utf8(view.substr(i, n)));
    return out;
}

}  // namespace disaff::features
