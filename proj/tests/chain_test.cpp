#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "disaff/chain/chain.hpp"
#include "disaff/chain/io.hpp"
#include "disaff/synthetic.hpp"

using namespace disaff;
using namespace disaff::chain;

namespace {

features::NormalizationConfig shipped_norm() {
    std::ifstream syn(DISAFF_DATA_DIR "/synonyms.tsv");
    std::ifstream ent(DISAFF_DATA_DIR "/entities.txt");
    return features::NormalizationConfig(features::load_synonyms(syn), features::load_lines(ent), true);
}

KeywordSet shipped_keywords(const features::NormalizationConfig& norm) {
    std::ifstream kw(DISAFF_DATA_DIR "/generic_keywords.txt");
    return make_keyword_set(features::load_lines(kw), norm);
}

/// Single-term stage: texts containing "polit" (a 5-gram and a stem) score
/// `bias`; every other text has an empty vector and scores 0.
Stage constant_stage(Task task, double bias) {
    auto vocab = features::Vocabulary::from_terms({"polit"});
    learners::LinearModel m(learners::Algorithm::pa, {}, make_fingerprint(task, default_scheme(task), vocab));
    m.set_weights(features::SparseVector::basis(0, bias));
    return {std::move(m), std::move(vocab)};
}

const ChainConfig& trained_config() {
    static const ChainConfig config = [] {
        const auto norm = shipped_norm();
        const auto data = synthetic::labeled_texts(3000, 77);
        std::vector<std::string> pt, st;
        std::vector<int> pl, sl;
        for (const auto& d : data) {
            pt.push_back(d.text);
            pl.push_back(d.labels.political ? 1 : -1);
            if (d.labels.political) {
                st.push_back(d.text);
                sl.push_back(d.labels.negative ? 1 : -1);
            }
        }
        auto pol = train_stage(Task::political, pt, pl, {learners::Algorithm::pa, {}}, 1, norm).stage;
        auto sen = train_stage(Task::sentiment, st, sl, {learners::Algorithm::alma, {}}, 2, norm).stage;
        return make_chain_config(std::move(pol), std::move(sen), shipped_keywords(norm), norm);
    }();
    return config;
}

corpus::Tweet tweet(std::string id, std::string text, std::string when = "2012-05-01T12:00:00Z") {
    return {std::move(id), "u", *util::parse_timestamp(when), std::move(text)};
}

void expect_nested(const std::vector<ChainVerdict>& verdicts) {
    for (const auto& v : verdicts) {
        EXPECT_EQ(v.negative.has_value(), v.political);
        EXPECT_EQ(v.generic.has_value(), v.negative.value_or(false));
        EXPECT_EQ(v.relevant, v.generic.value_or(false));
    }
}

}  // namespace

TEST(IsGeneric, Examples) {
    const auto norm = shipped_norm();
    const auto kw = shipped_keywords(norm);
    EXPECT_TRUE(is_generic(features::normalize_for_generic("questi politici ladri", norm), kw));
    EXPECT_TRUE(is_generic(features::normalize_for_generic("I POLITICI!", norm), kw));
    EXPECT_FALSE(is_generic(features::normalize_for_generic("monti e bersani ladri", norm), kw));
    EXPECT_FALSE(is_generic({}, kw));
    // Synonyms are applied before matching.
    EXPECT_TRUE(is_generic(features::normalize_for_generic("deputati a casa", norm), kw));
}

TEST(ChainConfig, ValidatesFingerprintsAndKeywords) {
    const auto norm = shipped_norm();
    EXPECT_THROW(make_chain_config(constant_stage(Task::sentiment, 1), constant_stage(Task::sentiment, 1),
                                   shipped_keywords(norm), norm),
                 ValidationError);
    EXPECT_THROW(make_chain_config(constant_stage(Task::political, 1), constant_stage(Task::sentiment, 1), {}, norm),
                 ValidationError);
    auto stage = constant_stage(Task::political, 1);
    stage.vocabulary = features::Vocabulary::from_terms({"y"});
    EXPECT_THROW(stage.check(Task::political), ValidationError);
}

TEST(ClassifyTweet, GatingWithConstantStages) {
    const auto norm = shipped_norm();
    const auto kw = shipped_keywords(norm);
    const auto never = make_chain_config(constant_stage(Task::political, -1), constant_stage(Task::sentiment, 1), kw, norm);
    const auto v0 = classify_text("a", "i politici", never);
    EXPECT_FALSE(v0.political);
    EXPECT_FALSE(v0.negative);
    EXPECT_FALSE(v0.generic);
    EXPECT_FALSE(v0.relevant);

    const auto always = make_chain_config(constant_stage(Task::political, 1), constant_stage(Task::sentiment, 1), kw, norm);
    const auto v1 = classify_text("b", "i politici", always);
    EXPECT_TRUE(v1.political);
    EXPECT_EQ(v1.negative, true);
    EXPECT_EQ(v1.generic, true);
    EXPECT_TRUE(v1.relevant);
    // Empty vectors score 0 and the tie rule sends them on as political
    // and negative; the keyword check then fails.
    const auto v2 = classify_text("c", "solo monti", always);
    EXPECT_TRUE(v2.political);
    EXPECT_EQ(v2.generic, false);
    EXPECT_FALSE(v2.relevant);

    const auto positive = make_chain_config(constant_stage(Task::political, 1), constant_stage(Task::sentiment, -1), kw, norm);
    const auto v3 = classify_text("d", "x politici", positive);
    EXPECT_TRUE(v3.political);
    EXPECT_EQ(v3.negative, false);
    EXPECT_FALSE(v3.generic);
    EXPECT_FALSE(v3.relevant);
}

TEST(RunChain, EmptyAndSingle) {
    const auto& cfg = trained_config();
    const auto empty = run_chain({}, cfg);
    EXPECT_TRUE(empty.verdicts.empty());
    EXPECT_TRUE(empty.counts.empty());
    const std::vector<corpus::Tweet> one{tweet("1", "governo ladri politici vergogna")};
    const auto r = run_chain(one, cfg);
    ASSERT_EQ(r.counts.size(), 1u);
    EXPECT_EQ(util::format_date(r.counts.begin()->first), "2012-05-01");
    EXPECT_EQ(r.counts.begin()->second.total, 1u);
}

TEST(RunChain, BucketsByUtcDay) {
    const auto& cfg = trained_config();
    const std::vector<corpus::Tweet> t{tweet("1", "ciao", "2012-05-01T23:59:59Z"),
                                       tweet("2", "ciao", "2012-05-02T01:00:00+02:00"),
                                       tweet("3", "ciao", "2012-05-02T00:00:00Z")};
    const auto r = run_chain(t, cfg);
    ASSERT_EQ(r.counts.size(), 2u);
    EXPECT_EQ(r.counts.begin()->second.total, 2u);
}

TEST(RunChain, NestingAndCountInvariantsOnSyntheticCorpus) {
    const auto& cfg = trained_config();
    synthetic::PlantedOptions o;
    o.days = 20;
    o.political_per_day = 60;
    o.other_per_day = 40;
    o.spike_days = {};
    o.retweet_share = 0.1;
    const auto pc = synthetic::planted_corpus(o);
    const auto r = run_chain(pc.tweets, cfg);
    EXPECT_GT(r.retweets_excluded, 0u);
    EXPECT_EQ(r.verdicts.size() + r.retweets_excluded, pc.tweets.size());
    expect_nested(r.verdicts);
    std::set<std::string> s1, s2, s3;
    for (const auto& v : r.verdicts) {
        if (v.political) s1.insert(v.tweet_id);
        if (v.negative.value_or(false)) s2.insert(v.tweet_id);
        if (v.relevant) s3.insert(v.tweet_id);
    }
    EXPECT_TRUE(std::includes(s1.begin(), s1.end(), s2.begin(), s2.end()));
    EXPECT_TRUE(std::includes(s2.begin(), s2.end(), s3.begin(), s3.end()));
    for (const auto& [d, c] : r.counts) {
        EXPECT_LE(c.relevant, c.political);
        EXPECT_LE(c.political, c.total);
    }
    const auto keep_rt = run_chain(pc.tweets, cfg, {false, 0});
    EXPECT_EQ(keep_rt.verdicts.size(), pc.tweets.size());
}

TEST(RunChain, PermutationAndThreadInvariance) {
    const auto& cfg = trained_config();
    synthetic::PlantedOptions o;
    o.days = 10;
    o.political_per_day = 80;
    o.other_per_day = 40;
    o.spike_days = {};
    auto pc = synthetic::planted_corpus(o);
    const auto base = run_chain(pc.tweets, cfg, {true, 1});
    util::Rng rng(9);
    rng.shuffle(std::span<corpus::Tweet>{pc.tweets});
    const auto shuffled = run_chain(pc.tweets, cfg, {true, 4});
    EXPECT_EQ(base.counts, shuffled.counts);
    const auto key = [](std::vector<ChainVerdict> v) {
        std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.tweet_id < b.tweet_id; });
        return v;
    };
    EXPECT_EQ(key(base.verdicts), key(shuffled.verdicts));
}

TEST(RunChain, PlantedTwentyPercentRatio) {
    const auto& cfg = trained_config();
    synthetic::PlantedOptions o;
    o.days = 15;
    o.political_per_day = 200;
    o.other_per_day = 100;
    o.base_ratio = 0.2;
    o.amplitude = 0.0;
    o.spike_days = {};
    const auto pc = synthetic::planted_corpus(o);
    const auto r = run_chain(pc.tweets, cfg);
    ASSERT_EQ(r.counts.size(), 15u);
    for (const auto& [d, c] : r.counts) {
        EXPECT_NEAR(static_cast<double>(c.relevant) / static_cast<double>(c.political), 0.20, 0.03);
    }
}

TEST(DailyCounts, MergeIsAssociativeAndCommutative) {
    const Date d1 = *util::parse_date("2012-05-01"), d2 = *util::parse_date("2012-05-02");
    DailyCounts a{{d1, {1, 0, 3}}}, b{{d1, {2, 1, 2}}, {d2, {1, 1, 1}}}, c{{d2, {0, 0, 5}}};
    DailyCounts ab = a;
    merge_into(ab, b);
    merge_into(ab, c);
    DailyCounts cb = c;
    merge_into(cb, b);
    merge_into(cb, a);
    EXPECT_EQ(ab, cb);
    EXPECT_EQ(ab[d1], (DailyCount{3, 1, 5}));
}

TEST(ChainIo, VerdictRoundTripAndGatingCheck) {
    std::vector<ChainVerdict> v(4);
    v[0].tweet_id = "a";
    v[1].tweet_id = "b";
    v[1].political = true;
    v[1].negative = false;
    v[2].tweet_id = "c";
    v[2].political = true;
    v[2].negative = true;
    v[2].generic = false;
    v[3].tweet_id = "d";
    v[3].political = true;
    v[3].negative = true;
    v[3].generic = true;
    v[3].relevant = true;
    std::stringstream s;
    for (const auto& x : v) write_verdict(s, x);
    EXPECT_EQ(s.str().substr(0, s.str().find('\n')),
              R"({"tweet_id":"a","political":false,"negative":null,"generic":null,"relevant":false})");
    EXPECT_EQ(read_verdicts(s), v);
    std::istringstream bad(R"({"tweet_id":"a","political":false,"negative":true,"generic":null,"relevant":false})");
    EXPECT_THROW(read_verdicts(bad), ParseError);
}

TEST(ChainIo, CountsRoundTripAndInvariant) {
    DailyCounts c{{*util::parse_date("2012-05-01"), {5, 2, 9}}, {*util::parse_date("2012-05-03"), {0, 0, 4}}};
    std::stringstream s;
    write_counts(s, c);
    EXPECT_EQ(s.str(), "date,political,relevant,total\n2012-05-01,5,2,9\n2012-05-03,0,0,4\n");
    EXPECT_EQ(read_counts(s), c);
    std::istringstream bad("date,political,relevant,total\n2012-05-01,1,2,9\n");
    EXPECT_THROW(read_counts(bad), ParseError);
}
