#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "disaff/corpus/records.hpp"
#include "disaff/error.hpp"

namespace disaff::corpus {

enum class CodedVariable { political, sentiment };

/// Krippendorff's alpha for nominal data given per-unit value lists.
/// Values are opaque category ids; units with fewer than two values do not
/// pair and are ignored.
inline double krippendorff_alpha_nominal(const std::vector<std::vector<int>>& units) {
    std::map<std::pair<int, int>, double> coincidence;
    std::map<int, double> marginal;
    double total = 0.0;
    for (const auto& values : units) {
        const std::size_t m = values.size();
        if (m < 2) continue;
        const double w = 1.0 / static_cast<double>(m - 1);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                if (i == j) continue;
                coincidence[{values[i], values[j]}] += w;
            }
        }
        for (int v : values) marginal[v] += 1.0;
        total += static_cast<double>(m);
    }
    if (total == 0.0) throw ValidationError("krippendorff alpha: no unit has two or more codings");

    double disagree_observed = 0.0;
    for (const auto& [pair, count] : coincidence) {
        if (pair.first != pair.second) disagree_observed += count;
    }
    double disagree_expected = 0.0;
    for (const auto& [c, nc] : marginal) {
        for (const auto& [k, nk] : marginal) {
            if (c != k) disagree_expected += nc * nk;
        }
    }
    if (disagree_expected == 0.0) return 1.0;
    const double d_o = disagree_observed / total;
    const double d_e = disagree_expected / (total * (total - 1.0));
    return 1.0 - d_o / d_e;
}

/// Alpha over annotations, one unit per tweet id. For the sentiment variable
/// only annotations carrying a sentiment value count.
inline double krippendorff_alpha(std::span<const Annotation> annotations, CodedVariable variable) {
    std::map<std::string, std::vector<int>> units;
    for (const auto& a : annotations) {
        if (variable == CodedVariable::political) {
            units[a.tweet_id].push_back(a.political ? 1 : 0);
        } else if (a.sentiment) {
            units[a.tweet_id].push_back(*a.sentiment == Sentiment::negative ? 1 : 0);
        }
    }
    std::vector<std::vector<int>> values;
    values.reserve(units.size());
    for (auto& [id, v] : units) values.push_back(std::move(v));
    return krippendorff_alpha_nominal(values);
}

}  // namespace disaff::corpus
