#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "disaff/error.hpp"
#include "disaff/features/sparse_vector.hpp"

namespace disaff::learners {

using features::FeatureIndex;
using features::SparseEntry;
using features::SparseVector;

enum class Algorithm { pa, alma, pegasos };

inline std::string_view to_string(Algorithm a) {
    switch (a) {
        case Algorithm::pa: return "pa";
        case Algorithm::alma: return "alma";
        case Algorithm::pegasos: return "pegasos";
    }
    return "?";
}

inline std::string_view display_name(Algorithm a) {
    switch (a) {
        case Algorithm::pa: return "PA";
        case Algorithm::alma: return "ALMA";
        case Algorithm::pegasos: return "PEGASOS";
    }
    return "?";
}

inline std::optional<Algorithm> parse_algorithm(std::string_view s) {
    if (s == "pa") return Algorithm::pa;
    if (s == "alma") return Algorithm::alma;
    if (s == "pegasos") return Algorithm::pegasos;
    return std::nullopt;
}

struct Hyperparameters {
    /// PA-I aggressiveness cap; +inf gives the uncapped rule.
    double C = 1.0;
    /// ALMA approximation parameter in (0, 1].
    double alpha = 0.9;
    /// Pegasos regularization.
    double lambda = 1e-4;
    /// Pegasos projection onto the ball of radius 1/sqrt(lambda).
    bool projection = true;
    /// Constant feature at index 0 with value 1 (attached to non-empty inputs).
    bool bias = true;

    friend bool operator==(const Hyperparameters&, const Hyperparameters&) = default;
};

/// What the weights were trained against; checked before a model is applied.
struct FeatureFingerprint {
    std::string task;
    std::string tokenizer;
    std::string scheme;
    std::uint64_t vocabulary_hash = 0;

    friend bool operator==(const FeatureFingerprint&, const FeatureFingerprint&) = default;
};

inline void validate(Algorithm algorithm, const Hyperparameters& h) {
    switch (algorithm) {
        case Algorithm::pa:
            if (!(h.C > 0.0)) throw ValidationError("PA: C must be positive");
            break;
        case Algorithm::alma:
            if (!(h.alpha > 0.0 && h.alpha <= 1.0)) throw ValidationError("ALMA: alpha must lie in (0, 1]");
            break;
        case Algorithm::pegasos:
            if (!(h.lambda > 0.0) || !std::isfinite(h.lambda)) throw ValidationError("Pegasos: lambda must be positive");
            break;
    }
}

/// Linear classifier w stored as `scale * raw` so that the uniform shrink of
/// Pegasos costs O(1). The squared norm is tracked incrementally and
/// recomputed exactly every `kRenormEvery` updates.
class LinearModel {
public:
    static constexpr std::uint64_t kRenormEvery = 1024;

    LinearModel() = default;

    LinearModel(Algorithm algorithm, Hyperparameters hyper, FeatureFingerprint fingerprint = {})
        : algorithm_(algorithm), hyper_(hyper), fingerprint_(std::move(fingerprint)) {
        validate(algorithm_, hyper_);
    }

    Algorithm algorithm() const noexcept { return algorithm_; }
    const Hyperparameters& hyperparameters() const noexcept { return hyper_; }
    const FeatureFingerprint& fingerprint() const noexcept { return fingerprint_; }
    void set_fingerprint(FeatureFingerprint f) { fingerprint_ = std::move(f); }

    /// Updates for PA and ALMA; examples presented for Pegasos.
    std::uint64_t update_count() const noexcept { return update_count_; }
    void set_update_count(std::uint64_t n) noexcept { update_count_ = n; }
    void increment_updates() noexcept { ++update_count_; }

    double weight(FeatureIndex i) const noexcept { return i < raw_.size() ? scale_ * raw_[i] : 0.0; }

    double dot(const SparseVector& x) const noexcept {
        double s = 0.0;
        const auto n = raw_.size();
        for (const auto& e : x) {
            if (e.index < n) s += raw_[e.index] * e.weight;
        }
        return scale_ * s;
    }

    double squared_norm() const noexcept { return sq_norm_; }
    double norm() const noexcept { return std::sqrt(sq_norm_); }

    double exact_squared_norm() const noexcept {
        double s = 0.0;
        for (double r : raw_) s += r * r;
        return s * scale_ * scale_;
    }

    /// w <- w + c * x
    void add_scaled(const SparseVector& x, double c) {
        if (c == 0.0 || x.empty()) return;
        const double wx = dot(x);
        if (x.dimension() > raw_.size()) raw_.resize(x.dimension(), 0.0);
        const double rc = c / scale_;
        for (const auto& e : x) raw_[e.index] += rc * e.weight;
        sq_norm_ += 2.0 * c * wx + c * c * x.squared_norm();
        if (sq_norm_ < 0.0) sq_norm_ = 0.0;
        if (++modifications_ % kRenormEvery == 0) sq_norm_ = exact_squared_norm();
    }

    /// w <- f * w
    void scale_by(double f) {
        if (f == 0.0) {
            std::fill(raw_.begin(), raw_.end(), 0.0);
            scale_ = 1.0;
            sq_norm_ = 0.0;
            return;
        }
        scale_ *= f;
        sq_norm_ *= f * f;
        if (std::abs(scale_) < 1e-100 || std::abs(scale_) > 1e100) fold_scale();
    }

    /// Multiplies the scale into the stored weights.
    void fold_scale() {
        for (auto& r : raw_) r *= scale_;
        scale_ = 1.0;
        sq_norm_ = exact_squared_norm();
    }

    /// Nonzero weights, index order.
    SparseVector weights() const {
        std::vector<SparseEntry> out;
        for (std::size_t i = 0; i < raw_.size(); ++i) {
            const double w = scale_ * raw_[i];
            if (w != 0.0) out.push_back({static_cast<FeatureIndex>(i), w});
        }
        return SparseVector::from_sorted(std::move(out));
    }

    /// Replaces all weights (used when loading a persisted model).
    void set_weights(const SparseVector& w) {
        raw_.assign(w.dimension(), 0.0);
        for (const auto& e : w) raw_[e.index] = e.weight;
        scale_ = 1.0;
        sq_norm_ = exact_squared_norm();
    }

    /// Maps a feature vector from vocabulary space into model space: indices
    /// shift by one and index 0 carries the constant 1 when bias is on. Empty
    /// inputs stay empty.
    SparseVector augment(const SparseVector& x) const {
        if (!hyper_.bias || x.empty()) return x;
        std::vector<SparseEntry> out;
        out.reserve(x.size() + 1);
        out.push_back({0, 1.0});
        for (const auto& e : x) out.push_back({e.index + 1, e.weight});
        return SparseVector::from_sorted(std::move(out));
    }

    /// Score in model space for a vocabulary-space input, without building
    /// the augmented vector.
    double score(const SparseVector& x) const noexcept {
        if (!hyper_.bias) return dot(x);
        if (x.empty()) return 0.0;
        double s = raw_.empty() ? 0.0 : raw_[0];
        const auto n = raw_.size();
        for (const auto& e : x) {
            const std::size_t i = static_cast<std::size_t>(e.index) + 1;
            if (i < n) s += raw_[i] * e.weight;
        }
        return scale_ * s;
    }

    bool all_finite() const noexcept {
        if (!std::isfinite(scale_)) return false;
        for (double r : raw_) {
            if (!std::isfinite(r)) return false;
        }
        return true;
    }

private:
    Algorithm algorithm_ = Algorithm::pa;
    Hyperparameters hyper_;
    FeatureFingerprint fingerprint_;
    std::vector<double> raw_;
    double scale_ = 1.0;
    double sq_norm_ = 0.0;
    std::uint64_t update_count_ = 0;
    std::uint64_t modifications_ = 0;
};

struct Prediction {
    int label;
    double score;
};

/// Sign rule with ties going to +1. `x` is in vocabulary space.
inline Prediction predict(const LinearModel& model, const SparseVector& x) {
    const double s = model.score(x);
    return {s >= 0.0 ? +1 : -1, s};
}

}  // namespace disaff::learners
