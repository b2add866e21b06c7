#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "disaff/util/date.hpp"

namespace disaff::corpus {

/// Maximum UTF-8 byte length of a tweet body.
inline constexpr std::size_t kMaxTweetBytes = 560;

struct Tweet {
    std::string id;
    std::string user_id;
    Timestamp created_at;
    std::string text;

    Date date() const { return util::day_of(created_at); }

    friend bool operator==(const Tweet&, const Tweet&) = default;
};

enum class Sentiment { negative, non_negative };

struct Annotation {
    std::string tweet_id;
    std::string coder_id;
    bool political = false;
    /// Only meaningful when `political`; absent when the coder skipped it.
    std::optional<Sentiment> sentiment;

    friend bool operator==(const Annotation&, const Annotation&) = default;
};

/// Training example after label aggregation. `sentiment` present implies
/// `political`.
struct LabeledTweet {
    Tweet tweet;
    bool political = false;
    std::optional<Sentiment> sentiment;
};

struct NewsItem {
    Date date;
    std::string title;
    bool political = false;

    friend bool operator==(const NewsItem&, const NewsItem&) = default;
};

enum class Indicator { inefficacy, no_vote };

struct SurveyPoint {
    Date date;
    Indicator indicator = Indicator::inefficacy;
    /// Percentage in [0, 100].
    double value = 0.0;

    friend bool operator==(const SurveyPoint&, const SurveyPoint&) = default;
};

inline std::string_view to_string(Sentiment s) { return s == Sentiment::negative ? "neg" : "nonneg"; }

inline std::optional<Sentiment> parse_sentiment(std::string_view s) {
    if (s == "neg") return Sentiment::negative;
    if (s == "nonneg") return Sentiment::non_negative;
    return std::nullopt;
}

inline std::string_view to_string(Indicator i) { return i == Indicator::inefficacy ? "INEFFICACY" : "NO_VOTE"; }

inline std::optional<Indicator> parse_indicator(std::string_view s) {
    if (s == "INEFFICACY") return Indicator::inefficacy;
    if (s == "NO_VOTE") return Indicator::no_vote;
    return std::nullopt;
}

}  // namespace disaff::corpus
