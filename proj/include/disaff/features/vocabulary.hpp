#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "disaff/error.hpp"
#include "disaff/features/sparse_vector.hpp"
#include "disaff/util/hash.hpp"

namespace disaff::features {

using TokenList = std::vector<std::string>;

struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept { return std::hash<std::string_view>{}(s); }
};

/// Dense term -> index map, indices contiguous from 0 in first-seen order.
/// Immutable once built.
class Vocabulary {
public:
    Vocabulary() = default;

    /// Terms in index order; duplicates are rejected.
    static Vocabulary from_terms(std::vector<std::string> terms) {
        Vocabulary v;
        v.index_.reserve(terms.size());
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (!v.index_.emplace(terms[i], static_cast<FeatureIndex>(i)).second) {
                throw ValidationError("vocabulary: duplicate term '" + terms[i] + "'");
            }
        }
        v.terms_ = std::move(terms);
        return v;
    }

    std::optional<FeatureIndex> find(std::string_view term) const {
        const auto it = index_.find(term);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    const std::string& term(FeatureIndex i) const { return terms_.at(i); }
    const std::vector<std::string>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Terms of `other` not already present are appended in their order.
    Vocabulary merged(const Vocabulary& other) const {
        auto terms = terms_;
        for (const auto& t : other.terms_) {
            if (!index_.contains(t)) terms.push_back(t);
        }
        return from_terms(std::move(terms));
    }

    /// Order-sensitive content hash, used in model fingerprints.
    std::uint64_t hash() const noexcept {
        std::uint64_t h = util::kFnvOffset;
        for (const auto& t : terms_) {
            h = util::fnv1a64(t, h);
            h = util::fnv1a64(std::string_view{"\n"}, h);
        }
        return h;
    }

private:
    std::vector<std::string> terms_;
    std::unordered_map<std::string, FeatureIndex, StringHash, std::equal_to<>> index_;
};

inline Vocabulary build_vocabulary(std::span<const TokenList> documents) {
    if (documents.empty()) throw ValidationError("build_vocabulary: empty corpus");
    std::vector<std::string> terms;
    std::unordered_map<std::string, FeatureIndex, StringHash, std::equal_to<>> seen;
    for (const auto& doc : documents) {
        for (const auto& tok : doc) {
            if (seen.find(std::string_view{tok}) == seen.end()) {
                seen.emplace(tok, static_cast<FeatureIndex>(terms.size()));
                terms.push_back(tok);
            }
        }
    }
    return Vocabulary::from_terms(std::move(terms));
}

}  // namespace disaff::features
