#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "disaff/error.hpp"
#include "disaff/features/normalizer.hpp"
#include "disaff/features/tokenizer.hpp"
#include "disaff/features/vectorize.hpp"
#include "disaff/features/vocabulary.hpp"
#include "disaff/learners/linear_model.hpp"
#include "disaff/learners/train.hpp"

namespace disaff::chain {

/// The two learned stages and their fixed feature configurations:
/// political uses character 5-grams with boolean presence, sentiment uses
/// normalized words (targets removed) with raw term frequency.
enum class Task { political, sentiment };

inline constexpr std::size_t kPoliticalNgram = 5;
inline constexpr std::string_view kPoliticalTokenizer = "char5";
inline constexpr std::string_view kSentimentTokenizer = "words-normalized";

inline std::string_view to_string(Task t) { return t == Task::political ? "political" : "sentiment"; }

inline std::optional<Task> parse_task(std::string_view s) {
    if (s == "political") return Task::political;
    if (s == "sentiment") return Task::sentiment;
    return std::nullopt;
}

inline std::string_view tokenizer_name(Task t) {
    return t == Task::political ? kPoliticalTokenizer : kSentimentTokenizer;
}

inline features::CountingScheme default_scheme(Task t) {
    return t == Task::political ? features::CountingScheme::boolean : features::CountingScheme::tf;
}

inline features::TokenList task_tokens(Task task, std::string_view text, const features::NormalizationConfig& norm) {
    if (task == Task::political) return features::char_ngrams(text, kPoliticalNgram);
    return features::normalize_for_sentiment(text, norm);
}

inline learners::FeatureFingerprint make_fingerprint(Task task, features::CountingScheme scheme,
                                                     const features::Vocabulary& vocab) {
    return {std::string{to_string(task)}, std::string{tokenizer_name(task)}, std::string{features::to_string(scheme)},
            vocab.hash()};
}

/// A trained stage: model plus the vocabulary its indices refer to.
struct Stage {
    learners::LinearModel model;
    features::Vocabulary vocabulary;

    /// Throws ValidationError unless the model was trained for `task` with
    /// its declared configuration against exactly this vocabulary.
    void check(Task task) const {
        const auto expected = make_fingerprint(task, default_scheme(task), vocabulary);
        const auto& fp = model.fingerprint();
        if (fp.task != expected.task || fp.tokenizer != expected.tokenizer || fp.scheme != expected.scheme) {
            throw ValidationError("model trained for " + fp.task + "/" + fp.tokenizer + "/" + fp.scheme +
                                  ", stage expects " + expected.task + "/" + expected.tokenizer + "/" +
                                  expected.scheme);
        }
        if (fp.vocabulary_hash != expected.vocabulary_hash) {
            throw ValidationError("model vocabulary hash does not match the supplied vocabulary");
        }
    }

    features::SparseVector featurize(Task task, std::string_view text, const features::NormalizationConfig& norm) const {
        const auto tokens = task_tokens(task, text, norm);
        return features::vectorize(tokens, default_scheme(task), vocabulary);
    }
};

/// Token lists for every text under the task's tokenizer.
inline std::vector<features::TokenList> task_corpus(Task task, std::span<const std::string> texts,
                                                   const features::NormalizationConfig& norm) {
    std::vector<features::TokenList> docs;
    docs.reserve(texts.size());
    for (const auto& t : texts) docs.push_back(task_tokens(task, t, norm));
    return docs;
}

inline std::vector<learners::Example> task_examples(Task task, std::span<const features::TokenList> docs,
                                                   std::span<const int> labels, const features::Vocabulary& vocab) {
    if (docs.size() != labels.size()) throw ValidationError("texts and labels differ in length");
    std::vector<learners::Example> out;
    out.reserve(docs.size());
    for (std::size_t i = 0; i < docs.size(); ++i) {
        out.push_back({features::vectorize(docs[i], default_scheme(task), vocab), labels[i]});
    }
    return out;
}

struct StageTraining {
    Stage stage;
    std::size_t presented = 0;
    std::size_t updates = 0;
    std::size_t skipped_zero = 0;
};

/// Builds the vocabulary over `texts`, runs one sweep and stamps the
/// fingerprint. Labels are +1 for the positive class of the task (political,
/// or negative sentiment).
inline StageTraining train_stage(Task task, std::span<const std::string> texts, std::span<const int> labels,
                                 const learners::TrainConfig& config, std::uint64_t seed,
                                 const features::NormalizationConfig& norm) {
    const auto docs = task_corpus(task, texts, norm);
    auto vocab = features::build_vocabulary(docs);
    const auto examples = task_examples(task, docs, labels, vocab);
    auto sweep = learners::train_sweep(examples, config, seed);
    sweep.model.set_fingerprint(make_fingerprint(task, default_scheme(task), vocab));
    return {Stage{std::move(sweep.model), std::move(vocab)}, sweep.presented, sweep.updates, sweep.skipped_zero};
}

}  // namespace disaff::chain
