#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "disaff/error.hpp"
#include "disaff/features/vocabulary.hpp"
#include "disaff/learners/linear_model.hpp"

// Model file, version 1:
//
//   # ...                (optional provenance comments)
//   disaff-model 1
//   key=value            (header; no tabs)
//   ...
//   index<TAB>weight     (body; nonzero weights, increasing index)
//
// Weights are written with 17 significant digits so a load reproduces the
// stored doubles exactly.

namespace disaff::learners {

inline constexpr std::string_view kModelMagic = "disaff-model 1";

namespace detail {

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string hex64(std::uint64_t v) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

template <class T>
T parse_number(const std::string& s, std::size_t line, const char* what) {
    T v{};
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw ParseError(line, std::string{"bad "} + what + " '" + s + "'");
    }
    return v;
}

inline double parse_real(const std::string& s, std::size_t line, const char* what) {
    if (s == "inf") return std::numeric_limits<double>::infinity();
    return parse_number<double>(s, line, what);
}

}  // namespace detail

inline void write_model(std::ostream& out, const LinearModel& model) {
    const auto& h = model.hyperparameters();
    const auto& fp = model.fingerprint();
    out << kModelMagic << '\n';
    out << "algorithm=" << to_string(model.algorithm()) << '\n';
    out << "C=" << (std::isinf(h.C) ? std::string{"inf"} : detail::format_double(h.C)) << '\n';
    out << "alpha=" << detail::format_double(h.alpha) << '\n';
    out << "lambda=" << detail::format_double(h.lambda) << '\n';
    out << "projection=" << (h.projection ? 1 : 0) << '\n';
    out << "bias=" << (h.bias ? 1 : 0) << '\n';
    out << "update_count=" << model.update_count() << '\n';
    out << "task=" << fp.task << '\n';
    out << "tokenizer=" << fp.tokenizer << '\n';
    out << "scheme=" << fp.scheme << '\n';
    out << "vocabulary_hash=" << detail::hex64(fp.vocabulary_hash) << '\n';
    for (const auto& e : model.weights()) out << e.index << '\t' << detail::format_double(e.weight) << '\n';
}

inline LinearModel read_model(std::istream& in) {
    std::string line;
    std::size_t n = 0;
    // Leading '#' lines are a provenance header and carry no model data.
    bool found = false;
    while (std::getline(in, line)) {
        ++n;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.starts_with('#')) continue;
        found = line == kModelMagic;
        break;
    }
    if (!found) throw ParseError(n ? n : 1, "not a disaff model file");
    std::map<std::string, std::string> header;
    std::vector<SparseEntry> weights;
    while (std::getline(in, line)) {
        ++n;
        if (line.empty()) continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos) {
            if (!weights.empty()) throw ParseError(n, "header line after weights");
            const auto eq = line.find('=');
            if (eq == std::string::npos) throw ParseError(n, "expected key=value");
            header[line.substr(0, eq)] = line.substr(eq + 1);
        } else {
            const auto idx = detail::parse_number<FeatureIndex>(line.substr(0, tab), n, "index");
            const auto w = detail::parse_real(line.substr(tab + 1), n, "weight");
            weights.push_back({idx, w});
        }
    }
    const auto get = [&](const char* key) -> const std::string& {
        const auto it = header.find(key);
        if (it == header.end()) throw ParseError(n, std::string{"model header lacks '"} + key + "'");
        return it->second;
    };
    const auto algorithm = parse_algorithm(get("algorithm"));
    if (!algorithm) throw ParseError(n, "unknown algorithm '" + get("algorithm") + "'");
    Hyperparameters h;
    h.C = detail::parse_real(get("C"), n, "C");
    h.alpha = detail::parse_real(get("alpha"), n, "alpha");
    h.lambda = detail::parse_real(get("lambda"), n, "lambda");
    h.projection = get("projection") == "1";
    h.bias = get("bias") == "1";
    FeatureFingerprint fp{get("task"), get("tokenizer"), get("scheme"), 0};
    {
        const auto& hex = get("vocabulary_hash");
        const auto res = std::from_chars(hex.data(), hex.data() + hex.size(), fp.vocabulary_hash, 16);
        if (res.ec != std::errc{} || res.ptr != hex.data() + hex.size()) throw ParseError(n, "bad vocabulary_hash");
    }
    LinearModel model(*algorithm, h, fp);
    model.set_update_count(detail::parse_number<std::uint64_t>(get("update_count"), n, "update_count"));
    try {
        model.set_weights(SparseVector::from_sorted(std::move(weights)));
    } catch (const ValidationError& e) {
        throw ParseError(n, e.what());
    }
    return model;
}

inline constexpr std::string_view kVocabularyMagic = "disaff-vocabulary 1";

/// Vocabulary sidecar: a magic line, then one term per line in index order.
/// Terms come from our tokenizers and never contain a newline; they may start
/// with '#', so only lines before the magic line can be comments.
inline void write_vocabulary(std::ostream& out, const features::Vocabulary& vocab) {
    out << kVocabularyMagic << '\n';
    for (const auto& t : vocab.terms()) out << t << '\n';
}

inline features::Vocabulary read_vocabulary(std::istream& in) {
    std::string line;
    std::size_t n = 0;
    bool found = false;
    while (std::getline(in, line)) {
        ++n;
        if (line.starts_with('#')) continue;
        found = line == kVocabularyMagic;
        break;
    }
    if (!found) throw ParseError(n ? n : 1, "not a disaff vocabulary file");
    std::vector<std::string> terms;
    while (std::getline(in, line)) {
        ++n;
        if (line.empty()) throw ParseError(n, "empty vocabulary term");
        terms.push_back(line);
    }
    try {
        return features::Vocabulary::from_terms(std::move(terms));
    } catch (const ValidationError& e) {
        throw ParseError(n, e.what());
    }
}

}  // namespace disaff::learners
