#pragma once

#include <algorithm>
#include <istream>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "disaff/error.hpp"
#include "disaff/features/italian_stemmer.hpp"
#include "disaff/features/tokenizer.hpp"
#include "disaff/util/utf8.hpp"

namespace disaff::features {

/// Word normalization for the sentiment and generic-speech stages.
///
/// Synonym entries are stored in the normalized (stemmed, when stemming is
/// on) space, so a file written with surface forms keeps working whatever
/// the stemming setting. Entities are matched as token sequences produced by
/// `tokenize_words`, which makes multi-word names ("movimento 5 stelle")
/// removable.
class NormalizationConfig {
public:
    NormalizationConfig() = default;

    /// `synonyms` holds (variant, canonical) pairs in surface form.
    NormalizationConfig(const std::vector<std::pair<std::string, std::string>>& synonyms,
                        const std::vector<std::string>& entities, bool stemming)
        : stemming_(stemming) {
        for (const auto& [variant, canonical] : synonyms) {
            const auto from = stem_if(util::to_lower_utf8(util::trim(variant)));
            const auto to = stem_if(util::to_lower_utf8(util::trim(canonical)));
            if (from.empty() || to.empty()) throw ValidationError("synonym entry with an empty side");
            const auto [it, inserted] = synonyms_.emplace(from, to);
            if (!inserted && it->second != to) {
                throw ValidationError("synonym '" + from + "' maps to both '" + it->second + "' and '" + to + "'");
            }
        }
        for (const auto& [from, to] : synonyms_) {
            const auto it = synonyms_.find(to);
            if (it != synonyms_.end() && it->second != to) {
                throw ValidationError("synonym chain: canonical term '" + to + "' is itself mapped to '" + it->second +
                                      "'");
            }
        }
        for (const auto& e : entities) {
            auto toks = tokenize_words(e);
            if (toks.empty()) continue;
            if (toks.size() == 1) single_entities_.insert(toks.front());
            max_entity_tokens_ = std::max(max_entity_tokens_, toks.size());
            entities_.insert(std::move(toks));
        }
    }

    bool stemming() const noexcept { return stemming_; }
    const std::map<std::string, std::string>& synonyms() const noexcept { return synonyms_; }
    std::size_t entity_count() const noexcept { return entities_.size(); }

    /// Stem (if enabled) then map through the synonym table.
    std::string normalize_token(std::string_view token) const {
        auto s = stem_if(std::string{token});
        if (const auto it = synonyms_.find(s); it != synonyms_.end()) return it->second;
        return s;
    }

    /// Length in tokens of the longest entity starting at `pos`, 0 if none.
    std::size_t entity_match(const TokenList& tokens, std::size_t pos) const {
        const std::size_t limit = std::min(max_entity_tokens_, tokens.size() - pos);
        for (std::size_t len = limit; len >= 1; --len) {
            TokenList probe(tokens.begin() + static_cast<std::ptrdiff_t>(pos),
                            tokens.begin() + static_cast<std::ptrdiff_t>(pos + len));
            if (entities_.contains(probe)) return len;
        }
        return 0;
    }

    bool is_single_entity(const std::string& token) const { return single_entities_.contains(token); }

private:
    std::string stem_if(std::string s) const { return stemming_ ? italian::stem(s) : s; }

    std::map<std::string, std::string> synonyms_;
    std::set<TokenList> entities_;
    std::unordered_set<std::string> single_entities_;
    std::size_t max_entity_tokens_ = 0;
    bool stemming_ = true;
};

/// Tokens of the sentiment task: targets (entity-list matches and
/// @-mentions) removed, then stemmed and synonym-collapsed.
inline TokenList normalize_for_sentiment(std::string_view text, const NormalizationConfig& config) {
    const auto tokens = tokenize_words(text);
    TokenList out;
    out.reserve(tokens.size());
    for (std::size_t i = 0; i < tokens.size();) {
        if (const auto n = config.entity_match(tokens, i); n > 0) {
            i += n;
            continue;
        }
        const auto& tok = tokens[i++];
        if (tok.starts_with('@')) continue;
        auto norm = config.normalize_token(tok);
        // Normalization may land on a target form; drop those too.
        if (norm.starts_with('@') || config.is_single_entity(norm)) continue;
        out.push_back(std::move(norm));
    }
    return out;
}

/// Tokens for generic-speech detection: same normalization as the sentiment
/// task, without target removal.
inline TokenList normalize_for_generic(std::string_view text, const NormalizationConfig& config) {
    auto tokens = tokenize_words(text);
    for (auto& t : tokens) t = config.normalize_token(t);
    return tokens;
}

/// "variant<TAB>canonical" lines; blank lines and `#` comments ignored.
inline std::vector<std::pair<std::string, std::string>> load_synonyms(std::istream& in) {
    std::vector<std::pair<std::string, std::string>> out;
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        ++n;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (util::trim(line).empty() || line.front() == '#') continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
            throw ParseError(n, "expected 'variant<TAB>canonical'");
        }
        out.emplace_back(line.substr(0, tab), line.substr(tab + 1));
    }
    return out;
}

/// One entry per line (entity surface forms, generic keywords).
inline std::vector<std::string> load_lines(std::istream& in) {
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        const auto t = util::trim(line);
        if (t.empty() || t.front() == '#') continue;
        out.emplace_back(t);
    }
    return out;
}

}  // namespace disaff::features
