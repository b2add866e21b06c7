#include <gtest/gtest.h>

#include <map>

#include "disaff/learners/train.hpp"
#include "disaff/synthetic.hpp"

using namespace disaff;
using namespace disaff::learners;

namespace {

double training_accuracy(const LinearModel& m, const std::vector<Example>& data) {
    return score_examples(m, data).first;
}

const std::vector<Algorithm> kAll = {Algorithm::pa, Algorithm::alma, Algorithm::pegasos};

}  // namespace

TEST(TrainSweep, SeparableCloudsTrainAccurately) {
    const auto data = synthetic::gaussian_clouds(1000, 10, 1.0, 17);
    for (auto a : kAll) {
        const auto r = train_sweep(data, {a, {}}, 5);
        EXPECT_EQ(r.presented, data.size());
        EXPECT_GE(training_accuracy(r.model, data), 0.95) << to_string(a);
    }
}

TEST(TrainSweep, SameSeedGivesBitwiseIdenticalModel) {
    const auto data = synthetic::gaussian_clouds(300, 10, 1.0, 18);
    for (auto a : kAll) {
        const auto r1 = train_sweep(data, {a, {}}, 99);
        const auto r2 = train_sweep(data, {a, {}}, 99);
        EXPECT_EQ(r1.model.weights(), r2.model.weights());
        EXPECT_EQ(r1.model.update_count(), r2.model.update_count());
    }
}

TEST(TrainSweep, RejectsEmptyAndSingleClass) {
    EXPECT_THROW(train_sweep(std::vector<Example>{}, {}, 1), ValidationError);
    const std::vector<Example> one{{SparseVector::basis(0), 1}, {SparseVector::basis(1), 1}};
    EXPECT_THROW(train_sweep(one, {}, 1), ValidationError);
    const std::vector<Example> bad{{SparseVector::basis(0), 1}, {SparseVector::basis(1), 2}};
    EXPECT_THROW(train_sweep(bad, {}, 1), ValidationError);
}

TEST(TrainSweep, CountsZeroVectorsWithoutBias) {
    Hyperparameters h;
    h.bias = false;
    const std::vector<Example> data{{SparseVector{}, 1}, {SparseVector::basis(0), -1}};
    const auto r = train_sweep(data, {Algorithm::pa, h}, 1);
    EXPECT_EQ(r.skipped_zero, 1u);
}

TEST(StratifiedFolds, EveryExampleInOneFoldWithBalancedClasses) {
    util::Rng rng(30);
    for (int round = 0; round < 50; ++round) {
        const std::size_t k = 2 + rng.below(9);
        std::vector<int> labels;
        const auto n = 2 * k + rng.below(200);
        for (std::uint64_t i = 0; i < n; ++i) labels.push_back(rng.below(3) == 0 ? 1 : -1);
        std::size_t pos = 0;
        for (int y : labels) pos += y > 0;
        if (pos < k || labels.size() - pos < k) continue;
        const auto fold = stratified_folds(labels, k, rng.next());
        ASSERT_EQ(fold.size(), labels.size());
        std::vector<std::size_t> fold_pos(k, 0), fold_all(k, 0);
        for (std::size_t i = 0; i < labels.size(); ++i) {
            ASSERT_LT(fold[i], k);
            ++fold_all[fold[i]];
            fold_pos[fold[i]] += labels[i] > 0;
        }
        const double share = static_cast<double>(pos) / static_cast<double>(labels.size());
        for (std::size_t f = 0; f < k; ++f) {
            EXPECT_LE(std::abs(static_cast<double>(fold_pos[f]) - share * static_cast<double>(fold_all[f])), 1.0);
        }
    }
}

TEST(StratifiedFolds, Errors) {
    EXPECT_THROW(stratified_folds(std::vector<int>{1, -1, 1, -1}, 1, 0), ValidationError);
    EXPECT_THROW(stratified_folds(std::vector<int>{1, -1, -1, -1}, 2, 0), ValidationError);
}

TEST(KfoldEvaluate, PerfectDatasetScoresOne) {
    std::vector<Example> data;
    for (int i = 0; i < 30; ++i) {
        data.push_back({SparseVector::basis(0), 1});
        data.push_back({SparseVector::basis(1), -1});
    }
    for (auto a : kAll) {
        // With 54 examples per fold the default lambda leaves Pegasos in its
        // large-step transient, where the last violator dominates.
        Hyperparameters h;
        if (a == Algorithm::pegasos) h.lambda = 0.1;
        const auto r = kfold_evaluate(data, {a, h}, 10, 4);
        ASSERT_EQ(r.folds.size(), 10u);
        EXPECT_DOUBLE_EQ(r.accuracy_mean, 1.0) << to_string(a);
        EXPECT_DOUBLE_EQ(r.f_mean, 1.0) << to_string(a);
        EXPECT_DOUBLE_EQ(r.accuracy_std, 0.0);
    }
}

TEST(KfoldEvaluate, ReportInvariants) {
    const auto data = synthetic::gaussian_clouds(400, 10, 0.0, 19, 0.8);
    const auto r = kfold_evaluate(data, {Algorithm::pa, {}}, 5, 6);
    ASSERT_EQ(r.folds.size(), 5u);
    std::size_t tested = 0;
    for (const auto& f : r.folds) {
        EXPECT_GE(f.accuracy, 0.0);
        EXPECT_LE(f.accuracy, 1.0);
        EXPECT_GE(f.f_measure, 0.0);
        EXPECT_LE(f.f_measure, 1.0);
        EXPECT_EQ(f.train_size + f.test_size, data.size());
        tested += f.test_size;
    }
    EXPECT_EQ(tested, data.size());
    const auto again = kfold_evaluate(data, {Algorithm::pa, {}}, 5, 6);
    for (std::size_t f = 0; f < 5; ++f) EXPECT_EQ(r.folds[f].accuracy, again.folds[f].accuracy);
    EXPECT_THROW(kfold_evaluate(data, {}, 1, 6), ValidationError);
}

TEST(ScoreExamples, FMeasureOnPositiveClass) {
    LinearModel m(Algorithm::pa, Hyperparameters{});
    m.set_weights(SparseVector::from_unsorted({{0, -0.5}, {1, 1.0}}));
    // Vocabulary index 0 scores +0.5 (predicted +1); index 1 scores -0.5.
    const std::vector<Example> test{
        {SparseVector::basis(0), 1}, {SparseVector::basis(0), -1}, {SparseVector::basis(1), 1}, {SparseVector::basis(1), -1}};
    const auto [acc, f] = score_examples(m, test);
    EXPECT_DOUBLE_EQ(acc, 0.5);
    EXPECT_DOUBLE_EQ(f, 0.5);  // tp 1, fp 1, fn 1
}

TEST(MeanAndStd, SampleStandardDeviation) {
    const std::vector<double> v{1.0, 2.0, 3.0, 4.0};
    const auto [m, s] = mean_and_sample_std(v);
    EXPECT_DOUBLE_EQ(m, 2.5);
    EXPECT_NEAR(s, std::sqrt(5.0 / 3.0), 1e-15);
}
