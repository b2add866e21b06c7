#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "disaff/corpus/records.hpp"
#include "disaff/error.hpp"
#include "disaff/features/sparse_vector.hpp"
#include "disaff/features/tokenizer.hpp"
#include "disaff/features/vectorize.hpp"

namespace disaff::analysis {

using features::IdfMap;
using features::SparseVector;

/// Idf over the union corpus: every news title and every tweet is one
/// document, tokenized with the word tokenizer.
inline IdfMap build_link_idf(std::span<const corpus::NewsItem> news, std::span<const corpus::Tweet> tweets) {
    std::vector<features::TokenList> docs;
    docs.reserve(news.size() + tweets.size());
    for (const auto& n : news) docs.push_back(features::tokenize_words(n.title));
    for (const auto& t : tweets) docs.push_back(features::tokenize_words(t.text));
    return features::build_idf(docs);
}

inline SparseVector tfidf_vector(std::string_view text, const IdfMap& idf) {
    const auto tokens = features::tokenize_words(text);
    return features::vectorize(tokens, features::CountingScheme::tfidf, idf.vocabulary(), &idf);
}

struct VectorMatch {
    std::size_t index = 0;
    double score = 0.0;
};

/// Scores closer than this (relative) count as tied.
inline constexpr double kTieTolerance = 1e-12;

/// argmax over candidates n of sum_t cos(n, t). Zero tweets are skipped, zero
/// candidates never win; ties go to the earliest candidate.
///
/// Since sum_t cos(n, t) = n . (sum_t t/|t|) / |n|, the tweet side collapses
/// into one direction sum first, making this linear in total nonzeros.
inline VectorMatch best_cosine_sum(std::span<const SparseVector> candidates, std::span<const SparseVector> tweets) {
    std::vector<features::SparseEntry> acc;
    std::size_t usable = 0;
    for (const auto& t : tweets) {
        const double n = t.norm();
        if (n == 0.0) continue;
        ++usable;
        for (const auto& e : t) acc.push_back({e.index, e.weight / n});
    }
    if (usable == 0) throw ValidationError("link_news: no tweet with a nonzero vector");
    const auto direction = SparseVector::from_unsorted(std::move(acc));
    std::optional<VectorMatch> best;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const double n = candidates[i].norm();
        if (n == 0.0) continue;
        const double s = candidates[i].dot(direction) / n;
        if (!best || s > best->score + kTieTolerance * std::max(1.0, std::abs(best->score))) {
            best = VectorMatch{i, s};
        }
    }
    if (!best) throw ValidationError("link_news: no candidate news with a nonzero vector");
    return *best;
}

struct NewsLink {
    corpus::NewsItem news;
    /// Position of the winner in the input news list.
    std::size_t news_index = 0;
    double score = 0.0;
};

/// Links a peak day to the political headline of that day whose tf-idf vector
/// has the largest summed cosine with the day's tweets.
inline NewsLink link_news(Date peak_date, std::span<const corpus::NewsItem> news,
                          std::span<const corpus::Tweet> tweets, const IdfMap& idf) {
    std::vector<SparseVector> cand;
    std::vector<std::size_t> cand_pos;
    for (std::size_t i = 0; i < news.size(); ++i) {
        if (news[i].political && news[i].date == peak_date) {
            cand.push_back(tfidf_vector(news[i].title, idf));
            cand_pos.push_back(i);
        }
    }
    std::vector<SparseVector> tv;
    for (const auto& t : tweets) {
        if (t.date() == peak_date) tv.push_back(tfidf_vector(t.text, idf));
    }
    if (cand.empty()) throw ValidationError("link_news: no political news on " + util::format_date(peak_date));
    const auto m = best_cosine_sum(cand, tv);
    return {news[cand_pos[m.index]], cand_pos[m.index], m.score};
}

}  // namespace disaff::analysis
