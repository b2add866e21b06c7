#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "disaff/corpus/records.hpp"

namespace disaff::corpus {

struct AggregationOptions {
    /// Annotations a tweet needs to be considered at all; also the number of
    /// sentiment votes needed for a sentiment label.
    std::size_t min_annotations = 3;
};

struct AggregationReport {
    std::size_t kept_political = 0;
    std::size_t kept_non_political = 0;
    std::size_t with_sentiment = 0;
    /// Political votes were not unanimous.
    std::size_t discarded_disagreement = 0;
    /// Political, but fewer than `min_annotations` sentiment votes.
    std::size_t sentiment_too_few_votes = 0;
    /// Political, but no sentiment label held a strict majority.
    std::size_t sentiment_no_majority = 0;
    std::vector<std::string> too_few_annotations;
    /// Annotations referencing tweets that are not in the corpus.
    std::size_t orphan_annotations = 0;
};

struct AggregationResult {
    std::vector<LabeledTweet> labeled;
    AggregationReport report;
};

/// Political label by unanimity, sentiment by strict majority (> half the
/// sentiment votes). Output keeps the order of `tweets`.
inline AggregationResult aggregate_labels(std::span<const Annotation> annotations, std::span<const Tweet> tweets,
                                          const AggregationOptions& options = {}) {
    struct Votes {
        std::size_t total = 0;
        std::size_t political = 0;
        std::size_t negative = 0;
        std::size_t non_negative = 0;
    };
    std::unordered_map<std::string, Votes> votes;
    for (const auto& t : tweets) votes.try_emplace(t.id);
    AggregationResult result;
    auto& rep = result.report;
    for (const auto& a : annotations) {
        const auto it = votes.find(a.tweet_id);
        if (it == votes.end()) {
            ++rep.orphan_annotations;
            continue;
        }
        auto& v = it->second;
        ++v.total;
        if (a.political) ++v.political;
        if (a.sentiment) ++(*a.sentiment == Sentiment::negative ? v.negative : v.non_negative);
    }
    for (const auto& t : tweets) {
        const auto& v = votes.at(t.id);
        if (v.total < options.min_annotations) {
            rep.too_few_annotations.push_back(t.id);
            continue;
        }
        if (v.political != 0 && v.political != v.total) {
            ++rep.discarded_disagreement;
            continue;
        }
        LabeledTweet lt{t, v.political == v.total, std::nullopt};
        if (lt.political) {
            ++rep.kept_political;
            const std::size_t cast = v.negative + v.non_negative;
            if (cast < options.min_annotations) {
                ++rep.sentiment_too_few_votes;
            } else if (2 * v.negative > cast) {
                lt.sentiment = Sentiment::negative;
            } else if (2 * v.non_negative > cast) {
                lt.sentiment = Sentiment::non_negative;
            } else {
                ++rep.sentiment_no_majority;
            }
            if (lt.sentiment) ++rep.with_sentiment;
        } else {
            ++rep.kept_non_political;
        }
        result.labeled.push_back(std::move(lt));
    }
    return result;
}

}  // namespace disaff::corpus
