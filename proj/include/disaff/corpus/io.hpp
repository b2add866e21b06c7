#pragma once

#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "disaff/corpus/records.hpp"
#include "disaff/error.hpp"
#include "disaff/util/csv.hpp"
#include "disaff/util/date.hpp"
#include "disaff/util/utf8.hpp"

namespace disaff::corpus {

// Tweets are JSON Lines with the fields id, user_id, created_at, text.
// Annotations, news and surveys are CSV with a header row naming the columns
// (any order). Lines starting with '#' and blank lines are ignored everywhere.

namespace detail {

/// Maps required column names onto positions in the header row.
class Header {
public:
    Header(util::LineReader& reader, std::initializer_list<std::string_view> required) {
        std::string line;
        if (!reader.next(line)) {
            empty_ = true;
            return;
        }
        auto cols = util::split_csv(line);
        if (!cols) throw ParseError(reader.line_number(), "malformed header");
        for (std::size_t i = 0; i < cols->size(); ++i) {
            index_[std::string{util::trim((*cols)[i])}] = i;
        }
        for (auto name : required) {
            if (!index_.contains(std::string{name})) {
                throw ParseError(reader.line_number(), "header lacks column '" + std::string{name} + "'");
            }
        }
        width_ = cols->size();
    }

    bool empty() const noexcept { return empty_; }

    std::vector<std::string> fields(const std::string& line, std::size_t line_no) const {
        auto f = util::split_csv(line);
        if (!f) throw ParseError(line_no, "unbalanced quotes");
        if (f->size() != width_) {
            throw ParseError(line_no, "expected " + std::to_string(width_) + " fields, got " + std::to_string(f->size()));
        }
        return std::move(*f);
    }

    std::size_t operator[](std::string_view name) const { return index_.at(std::string{name}); }

private:
    std::map<std::string, std::size_t> index_;
    std::size_t width_ = 0;
    bool empty_ = false;
};

inline bool parse_flag(std::string_view s, std::size_t line_no, std::string_view column) {
    s = util::trim(s);
    if (s == "1") return true;
    if (s == "0") return false;
    throw ParseError(line_no, std::string{column} + " must be 0 or 1, got '" + std::string{s} + "'");
}

inline Date parse_day(std::string_view s, std::size_t line_no) {
    const auto d = util::parse_date(util::trim(s));
    if (!d) throw ParseError(line_no, "unparseable date '" + std::string{s} + "'");
    return *d;
}

inline std::string format_number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace detail

inline std::vector<Tweet> parse_tweets(std::istream& in) {
    std::vector<Tweet> out;
    std::set<std::string> seen;
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
        if (!j.is_object()) throw ParseError(ln, "record is not an object");
        const auto field = [&](const char* name) -> std::string {
            const auto it = j.find(name);
            if (it == j.end() || !it->is_string()) throw ParseError(ln, std::string{"missing string field '"} + name + "'");
            return it->get<std::string>();
        };
        Tweet t;
        t.id = field("id");
        t.user_id = field("user_id");
        const auto created = field("created_at");
        t.text = field("text");
        const auto ts = util::parse_timestamp(created);
        if (!ts) throw ParseError(ln, "unparseable created_at '" + created + "'");
        t.created_at = *ts;
        if (t.id.empty()) throw ParseError(ln, "empty id");
        if (util::trim(t.text).empty()) throw ParseError(ln, "empty text");
        if (t.text.size() > kMaxTweetBytes) throw ParseError(ln, "text longer than 560 bytes");
        if (!seen.insert(t.id).second) throw ParseError(ln, "duplicate tweet id '" + t.id + "'");
        out.push_back(std::move(t));
    }
    return out;
}

inline void write_tweet(std::ostream& out, const Tweet& t) {
    nlohmann::ordered_json j;
    j["id"] = t.id;
    j["user_id"] = t.user_id;
    j["created_at"] = util::format_timestamp(t.created_at);
    j["text"] = t.text;
    out << j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace) << '\n';
}

inline void write_tweets(std::ostream& out, const std::vector<Tweet>& tweets) {
    for (const auto& t : tweets) write_tweet(out, t);
}

inline std::vector<Annotation> parse_annotations(std::istream& in) {
    std::vector<Annotation> out;
    util::LineReader reader(in);
    detail::Header header(reader, {"tweet_id", "coder_id", "political", "sentiment"});
    if (header.empty()) return out;
    std::set<std::pair<std::string, std::string>> seen;
    std::string line;
    while (reader.next(line)) {
        const auto ln = reader.line_number();
        const auto f = header.fields(line, ln);
        Annotation a;
        a.tweet_id = std::string{util::trim(f[header["tweet_id"]])};
        a.coder_id = std::string{util::trim(f[header["coder_id"]])};
        if (a.tweet_id.empty() || a.coder_id.empty()) throw ParseError(ln, "empty tweet_id or coder_id");
        a.political = detail::parse_flag(f[header["political"]], ln, "political");
        const auto s = util::trim(f[header["sentiment"]]);
        if (!s.empty()) {
            a.sentiment = parse_sentiment(s);
            if (!a.sentiment) throw ParseError(ln, "sentiment must be neg, nonneg or empty, got '" + std::string{s} + "'");
            if (!a.political) throw ParseError(ln, "sentiment given for a non-political annotation");
        }
        if (!seen.emplace(a.tweet_id, a.coder_id).second) {
            throw ParseError(ln, "duplicate annotation for (" + a.tweet_id + ", " + a.coder_id + ")");
        }
        out.push_back(std::move(a));
    }
    return out;
}

inline void write_annotations(std::ostream& out, const std::vector<Annotation>& annotations) {
    out << "tweet_id,coder_id,political,sentiment\n";
    for (const auto& a : annotations) {
        out << util::join_csv({a.tweet_id, a.coder_id, a.political ? "1" : "0",
                               a.sentiment ? std::string{to_string(*a.sentiment)} : std::string{}})
            << '\n';
    }
}

/// Optional inclusive date bounds a news file must respect.
struct DateRange {
    Date first;
    Date last;
};

inline std::vector<NewsItem> parse_news(std::istream& in, std::optional<DateRange> range = std::nullopt) {
    std::vector<NewsItem> out;
    util::LineReader reader(in);
    detail::Header header(reader, {"date", "political", "title"});
    if (header.empty()) return out;
    std::string line;
    while (reader.next(line)) {
        const auto ln = reader.line_number();
        const auto f = header.fields(line, ln);
        NewsItem item;
        item.date = detail::parse_day(f[header["date"]], ln);
        item.political = detail::parse_flag(f[header["political"]], ln, "political");
        item.title = f[header["title"]];
        if (util::trim(item.title).empty()) throw ParseError(ln, "empty title");
        if (range && (item.date < range->first || item.date > range->last)) {
            throw ParseError(ln, "date " + util::format_date(item.date) + " outside the corpus range");
        }
        out.push_back(std::move(item));
    }
    return out;
}

inline void write_news(std::ostream& out, const std::vector<NewsItem>& news) {
    out << "date,political,title\n";
    for (const auto& n : news) {
        out << util::join_csv({util::format_date(n.date), n.political ? "1" : "0", n.title}) << '\n';
    }
}

/// Rows with an empty value (a survey that did not measure the indicator)
/// produce no record.
inline std::vector<SurveyPoint> parse_surveys(std::istream& in) {
    std::vector<SurveyPoint> out;
    util::LineReader reader(in);
    detail::Header header(reader, {"date", "indicator", "value"});
    if (header.empty()) return out;
    std::set<std::pair<Date, Indicator>> seen;
    std::string line;
    while (reader.next(line)) {
        const auto ln = reader.line_number();
        const auto f = header.fields(line, ln);
        SurveyPoint p;
        p.date = detail::parse_day(f[header["date"]], ln);
        const auto ind = util::trim(f[header["indicator"]]);
        const auto parsed = parse_indicator(ind);
        if (!parsed) throw ParseError(ln, "unknown indicator '" + std::string{ind} + "'");
        p.indicator = *parsed;
        auto v = util::trim(f[header["value"]]);
        if (v.empty() || v == "-") continue;
        if (v.back() == '%') v.remove_suffix(1);
        const auto res = std::from_chars(v.data(), v.data() + v.size(), p.value);
        if (res.ec != std::errc{} || res.ptr != v.data() + v.size() || !std::isfinite(p.value)) {
            throw ParseError(ln, "unparseable value '" + std::string{v} + "'");
        }
        if (p.value < 0.0 || p.value > 100.0) throw ParseError(ln, "value outside [0, 100]");
        if (!seen.emplace(p.date, p.indicator).second) throw ParseError(ln, "duplicate (date, indicator)");
        out.push_back(p);
    }
    return out;
}

inline void write_surveys(std::ostream& out, const std::vector<SurveyPoint>& points) {
    out << "date,indicator,value\n";
    for (const auto& p : points) {
        out << util::format_date(p.date) << ',' << to_string(p.indicator) << ',' << detail::format_number(p.value)
            << '\n';
    }
}

enum class RecordKind { tweets, annotations, news, surveys };

using Record = std::variant<Tweet, Annotation, NewsItem, SurveyPoint>;

/// Kind-dispatched parse used by generic tooling; the typed parsers above are
/// the primary entry points.
inline std::vector<Record> parse_corpus(std::istream& in, RecordKind kind) {
    std::vector<Record> out;
    const auto append = [&out](auto&& items) {
        out.reserve(items.size());
        for (auto& item : items) out.emplace_back(std::move(item));
    };
    switch (kind) {
        case RecordKind::tweets: append(parse_tweets(in)); break;
        case RecordKind::annotations: append(parse_annotations(in)); break;
        case RecordKind::news: append(parse_news(in)); break;
        case RecordKind::surveys: append(parse_surveys(in)); break;
    }
    return out;
}

}  // namespace disaff::corpus
