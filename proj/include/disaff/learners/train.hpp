#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "disaff/error.hpp"
#include "disaff/learners/linear_model.hpp"
#include "disaff/learners/updates.hpp"
#include "disaff/util/random.hpp"

namespace disaff::learners {

/// A feature vector (vocabulary space) with its +1/-1 label.
struct Example {
    SparseVector x;
    int y = 1;
};

struct TrainConfig {
    Algorithm algorithm = Algorithm::pa;
    Hyperparameters hyper;
};

struct SweepResult {
    LinearModel model;
    std::size_t presented = 0;
    std::size_t updates = 0;
    /// Examples whose (augmented) vector was zero.
    std::size_t skipped_zero = 0;
};

namespace detail {

inline void require_both_classes(std::span<const Example> examples) {
    if (examples.empty()) throw ValidationError("training set is empty");
    bool pos = false, neg = false;
    for (const auto& e : examples) {
        check_label(e.y);
        (e.y > 0 ? pos : neg) = true;
    }
    if (!pos || !neg) throw ValidationError("training set contains a single class");
}

/// SplitMix64 finalizer, used to derive independent sub-seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace detail

/// One pass over `examples` in a seeded shuffled order.
inline SweepResult train_sweep(std::span<const Example> examples, const TrainConfig& config, std::uint64_t seed) {
    detail::require_both_classes(examples);
    SweepResult result{LinearModel(config.algorithm, config.hyper)};
    std::vector<std::size_t> order(examples.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    util::Rng rng(seed);
    rng.shuffle(std::span<std::size_t>{order});
    auto& model = result.model;
    for (const auto i : order) {
        const auto& ex = examples[i];
        const auto outcome = step(model, model.augment(ex.x), ex.y);
        ++result.presented;
        if (outcome == StepOutcome::skipped_zero) ++result.skipped_zero;
        if (outcome == StepOutcome::updated) ++result.updates;
    }
    if (!model.all_finite()) throw InvariantError("training produced a non-finite weight");
    return result;
}

struct FoldResult {
    double accuracy = 0.0;
    double f_measure = 0.0;
    double seconds = 0.0;
    std::size_t train_size = 0;
    std::size_t test_size = 0;
};

struct EvalReport {
    Algorithm algorithm = Algorithm::pa;
    std::uint64_t seed = 0;
    std::vector<FoldResult> folds;
    double accuracy_mean = 0.0;
    double accuracy_std = 0.0;
    double f_mean = 0.0;
    double f_std = 0.0;
    double seconds_mean = 0.0;
    double seconds_std = 0.0;
    double seconds_total = 0.0;
};

inline std::pair<double, double> mean_and_sample_std(std::span<const double> v) {
    if (v.empty()) return {0.0, 0.0};
    const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
    if (v.size() < 2) return {mean, 0.0};
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    return {mean, std::sqrt(ss / static_cast<double>(v.size() - 1))};
}

/// Fold id per example. Each class is shuffled and dealt round-robin, the
/// dealing continuing across classes, so every fold's class counts are within
/// one of the global proportion.
inline std::vector<std::size_t> stratified_folds(std::span<const int> labels, std::size_t k, std::uint64_t seed) {
    if (k < 2) throw ValidationError("k-fold: k must be >= 2");
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        check_label(labels[i]);
        (labels[i] > 0 ? pos : neg).push_back(i);
    }
    if (pos.size() < k || neg.size() < k) {
        throw ValidationError("k-fold: each class needs at least " + std::to_string(k) + " examples");
    }
    util::Rng rng(seed);
    rng.shuffle(std::span<std::size_t>{pos});
    rng.shuffle(std::span<std::size_t>{neg});
    std::vector<std::size_t> fold(labels.size());
    std::size_t next = 0;
    for (const auto* cls : {&pos, &neg}) {
        for (const auto i : *cls) fold[i] = next++ % k;
    }
    return fold;
}

/// Accuracy and positive-class F-measure of `model` on `test`.
inline std::pair<double, double> score_examples(const LinearModel& model, std::span<const Example> test) {
    std::size_t correct = 0, tp = 0, fp = 0, fn = 0;
    for (const auto& ex : test) {
        const int label = predict(model, ex.x).label;
        if (label == ex.y) ++correct;
        if (label > 0 && ex.y > 0) ++tp;
        if (label > 0 && ex.y < 0) ++fp;
        if (label < 0 && ex.y > 0) ++fn;
    }
    const double accuracy = test.empty() ? 0.0 : static_cast<double>(correct) / static_cast<double>(test.size());
    const double denom = static_cast<double>(2 * tp + fp + fn);
    const double f = denom == 0.0 ? 0.0 : 2.0 * static_cast<double>(tp) / denom;
    return {accuracy, f};
}

/// Stratified k-fold cross-validation; each fold trains with one sweep.
inline EvalReport kfold_evaluate(std::span<const Example> dataset, const TrainConfig& config, std::size_t k,
                                 std::uint64_t seed) {
    detail::require_both_classes(dataset);
    std::vector<int> labels;
    labels.reserve(dataset.size());
    for (const auto& e : dataset) labels.push_back(e.y);
    const auto fold_of = stratified_folds(labels, k, seed);

    EvalReport report;
    report.algorithm = config.algorithm;
    report.seed = seed;
    std::vector<Example> train, test;
    for (std::size_t f = 0; f < k; ++f) {
        train.clear();
        test.clear();
        for (std::size_t i = 0; i < dataset.size(); ++i) (fold_of[i] == f ? test : train).push_back(dataset[i]);
        const auto start = std::chrono::steady_clock::now();
        const auto sweep = train_sweep(train, config, detail::mix_seed(seed + 1 + f));
        const auto [acc, fm] = score_examples(sweep.model, test);
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        report.folds.push_back({acc, fm, elapsed.count(), train.size(), test.size()});
    }
    std::vector<double> accs, fs, secs;
    for (const auto& r : report.folds) {
        accs.push_back(r.accuracy);
        fs.push_back(r.f_measure);
        secs.push_back(r.seconds);
    }
    std::tie(report.accuracy_mean, report.accuracy_std) = mean_and_sample_std(accs);
    std::tie(report.f_mean, report.f_std) = mean_and_sample_std(fs);
    std::tie(report.seconds_mean, report.seconds_std) = mean_and_sample_std(secs);
    report.seconds_total = std::accumulate(secs.begin(), secs.end(), 0.0);
    return report;
}

}  // namespace disaff::learners
