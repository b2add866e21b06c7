#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "disaff/error.hpp"

namespace disaff::features {

using FeatureIndex = std::uint32_t;

struct SparseEntry {
    FeatureIndex index;
    double weight;

    friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Sorted (index, weight) pairs with strictly increasing indices and no
/// stored zeros.
class SparseVector {
public:
    SparseVector() = default;

    /// Sorts, sums duplicate indices and drops zeros.
    static SparseVector from_unsorted(std::vector<SparseEntry> entries) {
        std::sort(entries.begin(), entries.end(),
                  [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
        SparseVector v;
        v.entries_.reserve(entries.size());
        for (const auto& e : entries) {
            if (!v.entries_.empty() && v.entries_.back().index == e.index) {
                v.entries_.back().weight += e.weight;
            } else {
                v.entries_.push_back(e);
            }
        }
        std::erase_if(v.entries_, [](const SparseEntry& e) { return e.weight == 0.0; });
        return v;
    }

    /// Takes entries that already satisfy the invariants; throws otherwise.
    static SparseVector from_sorted(std::vector<SparseEntry> entries) {
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (entries[i].weight == 0.0 || !std::isfinite(entries[i].weight)) {
                throw ValidationError("sparse vector: zero or non-finite weight");
            }
            if (i && entries[i - 1].index >= entries[i].index) {
                throw ValidationError("sparse vector: indices not strictly increasing");
            }
        }
        SparseVector v;
        v.entries_ = std::move(entries);
        return v;
    }

    /// Unit vector along `index` scaled by `weight`.
    static SparseVector basis(FeatureIndex index, double weight = 1.0) {
        SparseVector v;
        if (weight != 0.0) v.entries_.push_back({index, weight});
        return v;
    }

    std::span<const SparseEntry> entries() const noexcept { return entries_; }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    double squared_norm() const noexcept {
        double s = 0.0;
        for (const auto& e : entries_) s += e.weight * e.weight;
        return s;
    }

    double norm() const noexcept { return std::sqrt(squared_norm()); }

    /// One past the largest stored index (0 when empty).
    FeatureIndex dimension() const noexcept { return entries_.empty() ? 0 : entries_.back().index + 1; }

    SparseVector scaled(double factor) const {
        if (factor == 0.0) return {};
        SparseVector v = *this;
        for (auto& e : v.entries_) e.weight *= factor;
        return v;
    }

    double dot(const SparseVector& other) const noexcept {
        double s = 0.0;
        auto a = entries_.begin();
        auto b = other.entries_.begin();
        while (a != entries_.end() && b != other.entries_.end()) {
            if (a->index < b->index) {
                ++a;
            } else if (b->index < a->index) {
                ++b;
            } else {
                s += a->weight * b->weight;
                ++a;
                ++b;
            }
        }
        return s;
    }

    friend bool operator==(const SparseVector&, const SparseVector&) = default;

private:
    std::vector<SparseEntry> entries_;
};

}  // namespace disaff::features
