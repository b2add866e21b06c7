#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "disaff/chain/chain.hpp"
#include "disaff/corpus/records.hpp"
#include "disaff/learners/train.hpp"
#include "disaff/util/date.hpp"
#include "disaff/util/random.hpp"

// Seeded generators for benchmarks, fixtures and end-to-end checks. The
// lexicon is Italian-flavoured and kept consistent with the shipped
// data/entities.txt and data/generic_keywords.txt.

namespace disaff::synthetic {

namespace lexicon {

inline constexpr std::array<std::string_view, 18> kPolitical = {
    "governo", "parlamento", "elezioni", "ministro", "legge", "riforma", "senato", "tasse", "decreto",
    "premier", "opposizione", "maggioranza", "coalizione", "spread", "manovra", "sindaco", "referendum", "votazione",
};
inline constexpr std::array<std::string_view, 18> kOther = {
    "calcio", "derby", "pizza", "mare", "sole", "film", "musica", "concerto", "vacanze",
    "gatto", "cane", "scuola", "treno", "caffè", "cena", "amici", "spiaggia", "libro",
};
inline constexpr std::array<std::string_view, 14> kNegative = {
    "vergogna", "schifo", "pessimo", "ladri", "incapaci", "disgusto", "corrotti",
    "inutili", "falliti", "buffoni", "delusione", "rabbia", "indecente", "ridicoli",
};
inline constexpr std::array<std::string_view, 12> kNonNegative = {
    "bene", "ottimo", "speranza", "fiducia", "bravo", "grazie",
    "interessante", "positivo", "finalmente", "complimenti", "giusto", "sereno",
};
inline constexpr std::array<std::string_view, 6> kGeneric = {
    "politici", "partiti", "casta", "parlamentari", "onorevoli", "politicanti",
};
inline constexpr std::array<std::string_view, 12> kEntities = {
    "monti", "bersani", "berlusconi", "grillo", "alfano", "casini",
    "vendola", "di pietro", "maroni", "pd", "pdl", "lega nord",
};
inline constexpr std::array<std::string_view, 16> kFiller = {
    "oggi", "domani", "ieri", "sempre", "ancora", "molto", "tutti", "questo",
    "come", "ma", "e", "il", "di", "che", "non", "per",
};
inline constexpr std::array<std::string_view, 5> kDecor = {"!", "?", ":)", "...", "http://t.co/x1"};

}  // namespace lexicon

struct TextLabels {
    bool political = false;
    bool negative = false;
    bool generic = false;

    bool relevant() const noexcept { return political && negative && generic; }
    friend bool operator==(const TextLabels&, const TextLabels&) = default;
};

template <std::size_t N>
std::string_view pick(util::Rng& rng, const std::array<std::string_view, N>& words) {
    return words[rng.below(N)];
}

/// A short text carrying the given labels. Non-political texts ignore
/// `negative`/`generic` but may still contain sentiment words.
inline std::string make_text(util::Rng& rng, const TextLabels& labels) {
    std::vector<std::string_view> words;
    const auto filler = [&] {
        const auto n = 1 + rng.below(3);
        for (std::uint64_t i = 0; i < n; ++i) words.push_back(pick(rng, lexicon::kFiller));
    };
    filler();
    if (labels.political) {
        const auto topics = 2 + rng.below(2);
        for (std::uint64_t i = 0; i < topics; ++i) words.push_back(pick(rng, lexicon::kPolitical));
        filler();
        if (labels.generic) {
            words.push_back(pick(rng, lexicon::kGeneric));
        } else {
            words.push_back(pick(rng, lexicon::kEntities));
        }
        const auto sentiments = 1 + rng.below(2);
        for (std::uint64_t i = 0; i < sentiments; ++i) {
            words.push_back(labels.negative ? pick(rng, lexicon::kNegative) : pick(rng, lexicon::kNonNegative));
        }
    } else {
        const auto topics = 2 + rng.below(2);
        for (std::uint64_t i = 0; i < topics; ++i) words.push_back(pick(rng, lexicon::kOther));
        filler();
        if (rng.below(2) == 0) {
            words.push_back(rng.below(2) ? pick(rng, lexicon::kNegative) : pick(rng, lexicon::kNonNegative));
        }
    }
    filler();
    // Light shuffle of the interior so word order carries no label signal.
    rng.shuffle(std::span<std::string_view>{words});
    std::string text;
    for (const auto w : words) {
        if (!text.empty()) text.push_back(' ');
        text += w;
    }
    if (rng.below(3) == 0) {
        text.push_back(' ');
        text += pick(rng, lexicon::kDecor);
    }
    return text;
}

struct LabeledText {
    std::string text;
    TextLabels labels;
};

/// Texts with independent label draws: political with probability
/// `political_share`; among political, negative and generic each 1/2.
inline std::vector<LabeledText> labeled_texts(std::size_t n, std::uint64_t seed, double political_share = 0.5) {
    util::Rng rng(seed);
    std::vector<LabeledText> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        TextLabels l;
        l.political = rng.uniform() < political_share;
        if (l.political) {
            l.negative = rng.below(2) == 0;
            l.generic = rng.below(2) == 0;
        }
        out.push_back({make_text(rng, l), l});
    }
    return out;
}

/// Two Gaussian clouds in `dims` dimensions around +/- `separation` along a
/// random unit direction u; points with y * (u . x) < margin are redrawn.
/// Indices 0..dims-1, all coordinates stored (zeros dropped).
inline std::vector<learners::Example> gaussian_clouds(std::size_t n, std::size_t dims, double margin,
                                                      std::uint64_t seed, double separation = 3.0) {
    util::Rng rng(seed);
    std::vector<double> u(dims);
    double norm = 0.0;
    for (auto& c : u) {
        c = rng.normal();
        norm += c * c;
    }
    norm = std::sqrt(norm);
    for (auto& c : u) c /= norm;
    std::vector<learners::Example> out;
    out.reserve(n);
    std::vector<double> x(dims);
    while (out.size() < n) {
        const int y = out.size() % 2 == 0 ? 1 : -1;
        double proj = 0.0;
        for (std::size_t d = 0; d < dims; ++d) {
            x[d] = rng.normal() + y * separation * u[d];
            proj += u[d] * x[d];
        }
        if (y * proj < margin) continue;
        std::vector<features::SparseEntry> entries;
        for (std::size_t d = 0; d < dims; ++d) {
            if (x[d] != 0.0) entries.push_back({static_cast<features::FeatureIndex>(d), x[d]});
        }
        out.push_back({features::SparseVector::from_sorted(std::move(entries)), y});
    }
    return out;
}

struct PlantedOptions {
    Date start = Date{std::chrono::year{2012} / std::chrono::April / 4};
    std::size_t days = 180;
    std::size_t political_per_day = 500;
    std::size_t other_per_day = 300;
    double base_ratio = 0.25;
    double amplitude = 0.12;
    double period_days = 60.0;
    /// Day offsets of the planted spikes and the amount added on those days.
    std::vector<std::size_t> spike_days = {37, 95, 148};
    double spike_height = 0.3;
    /// Fraction of tweets written as retweets (excluded by the chain).
    double retweet_share = 0.0;
    std::uint64_t seed = 1;
};

struct PlantedCorpus {
    std::vector<corpus::Tweet> tweets;
    std::vector<TextLabels> truth;
    /// Counts implied by the planted labels.
    chain::DailyCounts truth_counts;
    /// Planted relevant / political ratio per day offset.
    std::vector<double> planted_ratio;
    std::vector<Date> spike_dates;
};

/// Planted curve: base - amplitude * cos(2 pi d / period), so the series
/// starts and (for whole periods) ends in a trough, plus single-day spikes.
inline double planted_ratio(const PlantedOptions& o, std::size_t day) {
    double r = o.base_ratio - o.amplitude * std::cos(6.283185307179586 * static_cast<double>(day) / o.period_days);
    for (const auto s : o.spike_days) {
        if (s == day) r += o.spike_height;
    }
    return std::clamp(r, 0.0, 1.0);
}

inline PlantedCorpus planted_corpus(const PlantedOptions& o) {
    util::Rng rng(o.seed);
    PlantedCorpus pc;
    pc.tweets.reserve(o.days * (o.political_per_day + o.other_per_day));
    std::size_t next_id = 1;
    for (std::size_t day = 0; day < o.days; ++day) {
        const Date date = o.start + std::chrono::days{day};
        const double ratio = planted_ratio(o, day);
        pc.planted_ratio.push_back(ratio);
        for (const auto s : o.spike_days) {
            if (s == day) pc.spike_dates.push_back(date);
        }
        const auto relevant = static_cast<std::size_t>(std::llround(ratio * static_cast<double>(o.political_per_day)));
        std::vector<TextLabels> labels;
        for (std::size_t i = 0; i < o.political_per_day; ++i) {
            TextLabels l{true, false, false};
            if (i < relevant) {
                l.negative = l.generic = true;
            } else {
                // Cycle the three non-relevant political combinations.
                const auto k = (i - relevant) % 3;
                l.negative = k == 0;
                l.generic = k == 1;
            }
            labels.push_back(l);
        }
        labels.resize(labels.size() + o.other_per_day, TextLabels{});
        rng.shuffle(std::span<TextLabels>{labels});
        auto& tc = pc.truth_counts[date];
        for (const auto& l : labels) {
            corpus::Tweet t;
            t.id = std::to_string(next_id++);
            t.user_id = "u" + std::to_string(rng.below(5000));
            t.created_at = Timestamp{date} + std::chrono::seconds{rng.below(86400)};
            t.text = make_text(rng, l);
            if (o.retweet_share > 0.0 && rng.uniform() < o.retweet_share) {
                t.text = "RT @" + t.user_id + ": " + t.text;
            } else {
                ++tc.total;
                if (l.political) ++tc.political;
                if (l.relevant()) ++tc.relevant;
            }
            pc.tweets.push_back(std::move(t));
            pc.truth.push_back(l);
        }
    }
    return pc;
}

}  // namespace disaff::synthetic
