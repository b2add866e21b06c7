#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "disaff/chain/stage_features.hpp"
#include "disaff/corpus/records.hpp"
#include "disaff/error.hpp"
#include "disaff/features/normalizer.hpp"
#include "disaff/learners/linear_model.hpp"

namespace disaff::chain {

using KeywordSet = std::unordered_set<std::string, features::StringHash, std::equal_to<>>;

struct ChainConfig {
    Stage political;
    Stage sentiment;
    /// Generic-speech keywords, already normalized like tweet tokens.
    KeywordSet generic_keywords;
    features::NormalizationConfig normalization;
};

/// Normalizes raw keyword lines the same way tweet tokens are normalized for
/// the generic check. Multi-token lines contribute each token.
inline KeywordSet make_keyword_set(const std::vector<std::string>& lines, const features::NormalizationConfig& norm) {
    KeywordSet out;
    for (const auto& line : lines) {
        for (auto& t : features::normalize_for_generic(line, norm)) out.insert(std::move(t));
    }
    return out;
}

/// Validates fingerprints and the keyword set, then assembles the config.
inline ChainConfig make_chain_config(Stage political, Stage sentiment, KeywordSet keywords,
                                     features::NormalizationConfig normalization) {
    political.check(Task::political);
    sentiment.check(Task::sentiment);
    if (keywords.empty()) throw ValidationError("generic keyword set is empty");
    return {std::move(political), std::move(sentiment), std::move(keywords), std::move(normalization)};
}

struct ChainVerdict {
    std::string tweet_id;
    bool political = false;
    /// Present iff political.
    std::optional<bool> negative;
    /// Present iff negative.
    std::optional<bool> generic;
    bool relevant = false;

    friend bool operator==(const ChainVerdict&, const ChainVerdict&) = default;
};

inline bool is_generic(std::span<const std::string> tokens, const KeywordSet& keywords) {
    return std::any_of(tokens.begin(), tokens.end(),
                       [&](const std::string& t) { return keywords.find(std::string_view{t}) != keywords.end(); });
}

inline ChainVerdict classify_text(std::string tweet_id, std::string_view text, const ChainConfig& config) {
    ChainVerdict v;
    v.tweet_id = std::move(tweet_id);
    const auto px = config.political.featurize(Task::political, text, config.normalization);
    v.political = learners::predict(config.political.model, px).label > 0;
    if (!v.political) return v;
    const auto sx = config.sentiment.featurize(Task::sentiment, text, config.normalization);
    v.negative = learners::predict(config.sentiment.model, sx).label > 0;
    if (!*v.negative) return v;
    v.generic = is_generic(features::normalize_for_generic(text, config.normalization), config.generic_keywords);
    v.relevant = *v.generic;
    return v;
}

inline ChainVerdict classify_tweet(const corpus::Tweet& tweet, const ChainConfig& config) {
    return classify_text(tweet.id, tweet.text, config);
}

struct DailyCount {
    std::size_t political = 0;
    std::size_t relevant = 0;
    std::size_t total = 0;

    DailyCount& operator+=(const DailyCount& o) {
        political += o.political;
        relevant += o.relevant;
        total += o.total;
        return *this;
    }

    friend bool operator==(const DailyCount&, const DailyCount&) = default;
};

using DailyCounts = std::map<Date, DailyCount>;

inline void merge_into(DailyCounts& into, const DailyCounts& from) {
    for (const auto& [d, c] : from) into[d] += c;
}

struct RunOptions {
    /// Drop tweets whose text starts with the repost marker "RT @".
    bool exclude_retweets = true;
    /// Worker threads; 0 picks the hardware concurrency.
    unsigned threads = 0;
};

struct ChainRun {
    std::vector<ChainVerdict> verdicts;
    DailyCounts counts;
    std::size_t retweets_excluded = 0;
};

inline bool is_retweet(std::string_view text) { return text.starts_with("RT @"); }

/// Verdicts in input order (retweets omitted when excluded) and per-day
/// counts bucketed by the UTC calendar date of `created_at`.
inline ChainRun run_chain(std::span<const corpus::Tweet> tweets, const ChainConfig& config,
                          const RunOptions& options = {}) {
    std::vector<std::size_t> kept;
    kept.reserve(tweets.size());
    ChainRun run;
    for (std::size_t i = 0; i < tweets.size(); ++i) {
        if (options.exclude_retweets && is_retweet(tweets[i].text)) {
            ++run.retweets_excluded;
        } else {
            kept.push_back(i);
        }
    }
    run.verdicts.resize(kept.size());
    unsigned workers = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, kept.size() / 256)));
    const auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) run.verdicts[k] = classify_tweet(tweets[kept[k]], config);
    };
    if (workers <= 1) {
        work(0, kept.size());
    } else {
        std::vector<std::jthread> pool;
        const std::size_t per = (kept.size() + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t b = std::min(kept.size(), w * per);
            const std::size_t e = std::min(kept.size(), b + per);
            pool.emplace_back(work, b, e);
        }
    }
    for (std::size_t k = 0; k < kept.size(); ++k) {
        const auto& v = run.verdicts[k];
        auto& c = run.counts[tweets[kept[k]].date()];
        ++c.total;
        if (v.political) ++c.political;
        if (v.relevant) ++c.relevant;
    }
    return run;
}

}  // namespace disaff::chain
