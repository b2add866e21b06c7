#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "disaff/error.hpp"
#include "disaff/features/sparse_vector.hpp"
#include "disaff/features/vocabulary.hpp"

namespace disaff::features {

enum class CountingScheme { tf, boolean, tfidf };

inline std::string_view to_string(CountingScheme s) {
    switch (s) {
        case CountingScheme::tf: return "tf";
        case CountingScheme::boolean: return "boolean";
        case CountingScheme::tfidf: return "tfidf";
    }
    return "?";
}

inline std::optional<CountingScheme> parse_scheme(std::string_view s) {
    if (s == "tf") return CountingScheme::tf;
    if (s == "boolean") return CountingScheme::boolean;
    if (s == "tfidf") return CountingScheme::tfidf;
    return std::nullopt;
}

/// Inverse document frequencies, idf(t) = ln(N / df(t)). Terms never seen are
/// absent and weigh 0. Term indices follow first appearance in the corpus, so
/// the map doubles as the vocabulary of tf-idf vectors.
class IdfMap {
public:
    IdfMap() = default;

    IdfMap(Vocabulary vocabulary, std::vector<double> idf, std::size_t document_count)
        : vocabulary_(std::move(vocabulary)), idf_(std::move(idf)), document_count_(document_count) {
        if (idf_.size() != vocabulary_.size()) throw ValidationError("idf map: size mismatch");
    }

    const Vocabulary& vocabulary() const noexcept { return vocabulary_; }
    std::size_t document_count() const noexcept { return document_count_; }
    std::size_t size() const noexcept { return idf_.size(); }

    double idf(FeatureIndex i) const { return idf_.at(i); }

    std::optional<double> idf(std::string_view term) const {
        const auto i = vocabulary_.find(term);
        if (!i) return std::nullopt;
        return idf_[*i];
    }

private:
    Vocabulary vocabulary_;
    std::vector<double> idf_;
    std::size_t document_count_ = 0;
};

inline IdfMap build_idf(std::span<const TokenList> documents) {
    if (documents.empty()) throw ValidationError("build_idf: no documents");
    std::vector<std::string> terms;
    std::vector<std::size_t> df;
    std::unordered_map<std::string, FeatureIndex, StringHash, std::equal_to<>> index;
    std::unordered_set<FeatureIndex> in_doc;
    for (const auto& doc : documents) {
        in_doc.clear();
        for (const auto& tok : doc) {
            auto it = index.find(std::string_view{tok});
            if (it == index.end()) {
                it = index.emplace(tok, static_cast<FeatureIndex>(terms.size())).first;
                terms.push_back(tok);
                df.push_back(0);
            }
            if (in_doc.insert(it->second).second) ++df[it->second];
        }
    }
    const double n = static_cast<double>(documents.size());
    std::vector<double> idf(df.size());
    for (std::size_t i = 0; i < df.size(); ++i) idf[i] = std::log(n / static_cast<double>(df[i]));
    return IdfMap(Vocabulary::from_terms(std::move(terms)), std::move(idf), documents.size());
}

/// Counts tokens against `vocab`; out-of-vocabulary tokens are ignored.
/// `tfidf` needs an idf map indexed like `vocab` (e.g. `idf->vocabulary()`).
inline SparseVector vectorize(std::span<const std::string> tokens, CountingScheme scheme, const Vocabulary& vocab,
                              const IdfMap* idf = nullptr) {
    if (scheme == CountingScheme::tfidf && !idf) throw ValidationError("vectorize: tf-idf requires an idf map");
    std::vector<SparseEntry> entries;
    entries.reserve(tokens.size());
    for (const auto& t : tokens) {
        if (const auto i = vocab.find(t)) entries.push_back({*i, 1.0});
    }
    auto v = SparseVector::from_unsorted(std::move(entries));
    if (scheme == CountingScheme::tf) return v;
    std::vector<SparseEntry> out;
    out.reserve(v.size());
    for (const auto& e : v) {
        if (scheme == CountingScheme::boolean) {
            out.push_back({e.index, 1.0});
        } else {
            const auto w = idf->idf(vocab.term(e.index));
            if (w && *w != 0.0) out.push_back({e.index, e.weight * *w});
        }
    }
    return SparseVector::from_sorted(std::move(out));
}

}  // namespace disaff::features
