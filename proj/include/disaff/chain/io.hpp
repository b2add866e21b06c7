#pragma once

#include <charconv>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "disaff/chain/chain.hpp"
#include "disaff/error.hpp"
#include "disaff/util/csv.hpp"
#include "disaff/util/date.hpp"

// Verdicts: JSON Lines {"tweet_id", "political", "negative", "generic",
// "relevant"}, with null for stages the tweet never reached.
// Daily counts: CSV with header date,political,relevant,total.

namespace disaff::chain {

inline void write_verdict(std::ostream& out, const ChainVerdict& v) {
    nlohmann::ordered_json j;
    j["tweet_id"] = v.tweet_id;
    j["political"] = v.political;
    j["negative"] = v.negative ? nlohmann::ordered_json(*v.negative) : nlohmann::ordered_json(nullptr);
    j["generic"] = v.generic ? nlohmann::ordered_json(*v.generic) : nlohmann::ordered_json(nullptr);
    j["relevant"] = v.relevant;
    out << j.dump() << '\n';
}

inline std::vector<ChainVerdict> read_verdicts(std::istream& in) {
    std::vector<ChainVerdict> out;
    util::LineReader reader(in);
    std::string line;
    while (reader.next(line)) {
        const auto ln = reader.line_number();
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(ln, std::string{"invalid JSON: "} + e.what());
        }
        const auto opt = [&](const char* key) -> std::optional<bool> {
            const auto it = j.find(key);
            if (it == j.end() || it->is_null()) return std::nullopt;
            if (!it->is_boolean()) throw ParseError(ln, std::string{key} + " must be boolean or null");
            return it->get<bool>();
        };
        if (!j.is_object() || !j.contains("tweet_id") || !j["tweet_id"].is_string()) {
            throw ParseError(ln, "verdict lacks tweet_id");
        }
        ChainVerdict v;
        v.tweet_id = j["tweet_id"].get<std::string>();
        const auto pol = opt("political");
        const auto rel = opt("relevant");
        if (!pol || !rel) throw ParseError(ln, "verdict lacks political/relevant");
        v.political = *pol;
        v.negative = opt("negative");
        v.generic = opt("generic");
        v.relevant = *rel;
        const bool gated = v.negative.has_value() == v.political &&
                           v.generic.has_value() == (v.negative.has_value() && *v.negative) &&
                           v.relevant == (v.generic.has_value() && *v.generic);
        if (!gated) throw ParseError(ln, "verdict fields violate stage gating");
        out.push_back(std::move(v));
    }
    return out;
}

inline void write_counts(std::ostream& out, const DailyCounts& counts) {
    out << "date,political,relevant,total\n";
    for (const auto& [d, c] : counts) {
        out << util::format_date(d) << ',' << c.political << ',' << c.relevant << ',' << c.total << '\n';
    }
}

inline DailyCounts read_counts(std::istream& in) {
    DailyCounts out;
    util::LineReader reader(in);
    std::string line;
    if (!reader.next(line)) return out;
    if (line != "date,political,relevant,total") throw ParseError(reader.line_number(), "unexpected counts header");
    while (reader.next(line)) {
        const auto ln = reader.line_number();
        const auto f = util::split_csv(line);
        if (!f || f->size() != 4) throw ParseError(ln, "expected 4 fields");
        const auto d = util::parse_date((*f)[0]);
        if (!d) throw ParseError(ln, "unparseable date '" + (*f)[0] + "'");
        DailyCount c;
        std::size_t* slots[] = {&c.political, &c.relevant, &c.total};
        for (int k = 0; k < 3; ++k) {
            const auto& s = (*f)[k + 1];
            const auto r = std::from_chars(s.data(), s.data() + s.size(), *slots[k]);
            if (r.ec != std::errc{} || r.ptr != s.data() + s.size()) throw ParseError(ln, "bad count '" + s + "'");
        }
        if (c.relevant > c.political || c.political > c.total) {
            throw ParseError(ln, "counts must satisfy relevant <= political <= total");
        }
        if (!out.emplace(*d, c).second) throw ParseError(ln, "duplicate date");
    }
    return out;
}

}  // namespace disaff::chain
