#include <gtest/gtest.h>

#include <cmath>

#include "disaff/features/sparse_vector.hpp"
#include "disaff/features/vectorize.hpp"
#include "disaff/features/vocabulary.hpp"
#include "disaff/util/random.hpp"

using namespace disaff;
using namespace disaff::features;
using Docs = std::vector<TokenList>;

namespace {

std::vector<std::pair<FeatureIndex, double>> entries(const SparseVector& v) {
    std::vector<std::pair<FeatureIndex, double>> out;
    for (const auto& e : v) out.emplace_back(e.index, e.weight);
    return out;
}

using Entries = std::vector<std::pair<FeatureIndex, double>>;

}  // namespace

TEST(SparseVector, FromUnsortedMergesAndDropsZeros) {
    const auto v = SparseVector::from_unsorted({{3, 1.0}, {1, 2.0}, {3, 1.5}, {2, 1.0}, {2, -1.0}});
    EXPECT_EQ(entries(v), (Entries{{1, 2.0}, {3, 2.5}}));
    EXPECT_EQ(v.dimension(), 4u);
    EXPECT_DOUBLE_EQ(v.squared_norm(), 4.0 + 6.25);
}

TEST(SparseVector, FromSortedValidates) {
    EXPECT_THROW(SparseVector::from_sorted({{2, 1.0}, {1, 1.0}}), ValidationError);
    EXPECT_THROW(SparseVector::from_sorted({{1, 1.0}, {1, 1.0}}), ValidationError);
    EXPECT_THROW(SparseVector::from_sorted({{1, 0.0}}), ValidationError);
    EXPECT_THROW(SparseVector::from_sorted({{1, NAN}}), ValidationError);
}

TEST(SparseVector, DotAndScale) {
    const auto a = SparseVector::from_unsorted({{0, 1.0}, {2, 3.0}, {5, -1.0}});
    const auto b = SparseVector::from_unsorted({{2, 2.0}, {4, 7.0}, {5, 1.0}});
    EXPECT_DOUBLE_EQ(a.dot(b), 5.0);
    EXPECT_DOUBLE_EQ(b.dot(a), 5.0);
    EXPECT_EQ(entries(a.scaled(2.0)), (Entries{{0, 2.0}, {2, 6.0}, {5, -2.0}}));
    EXPECT_TRUE(a.scaled(0.0).empty());
}

TEST(BuildVocabulary, FirstSeenOrder) {
    const Docs docs{{"a", "b"}, {"b"}};
    const auto v = build_vocabulary(docs);
    EXPECT_EQ(v.size(), 2u);
    EXPECT_EQ(v.find("a"), FeatureIndex{0});
    EXPECT_EQ(v.find("b"), FeatureIndex{1});
    EXPECT_FALSE(v.find("c"));
    EXPECT_EQ(v.term(1), "b");
}

TEST(BuildVocabulary, DeterministicAndErrors) {
    const Docs docs{{"x", "y", "x"}, {"z"}};
    EXPECT_EQ(build_vocabulary(docs).terms(), build_vocabulary(docs).terms());
    EXPECT_EQ(build_vocabulary(docs).hash(), build_vocabulary(docs).hash());
    EXPECT_THROW(build_vocabulary(Docs{}), ValidationError);
    EXPECT_THROW(Vocabulary::from_terms({"a", "a"}), ValidationError);
}

TEST(BuildVocabulary, DisjointMergeHasSummedSize) {
    const auto a = build_vocabulary(Docs{{"a", "b"}});
    const auto b = build_vocabulary(Docs{{"c"}, {"d", "e"}});
    const auto m = a.merged(b);
    EXPECT_EQ(m.size(), a.size() + b.size());
    EXPECT_EQ(m.find("d"), FeatureIndex{3});
    EXPECT_EQ(a.merged(a).size(), a.size());
    EXPECT_NE(a.hash(), m.hash());
}

TEST(Vectorize, TfAndBoolean) {
    const auto vocab = Vocabulary::from_terms({"a", "b"});
    const TokenList toks{"a", "a", "b", "oov"};
    EXPECT_EQ(entries(vectorize(toks, CountingScheme::tf, vocab)), (Entries{{0, 2.0}, {1, 1.0}}));
    EXPECT_EQ(entries(vectorize(toks, CountingScheme::boolean, vocab)), (Entries{{0, 1.0}, {1, 1.0}}));
    EXPECT_TRUE(vectorize(TokenList{"oov"}, CountingScheme::tf, vocab).empty());
    EXPECT_THROW(vectorize(toks, CountingScheme::tfidf, vocab), ValidationError);
}

TEST(Vectorize, TfidfUsesNaturalLog) {
    // "a" appears in 1 of 3 documents.
    const auto idf = build_idf(Docs{{"a"}, {"b"}, {"b", "c"}});
    const auto v = vectorize(TokenList{"a"}, CountingScheme::tfidf, idf.vocabulary(), &idf);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_NEAR(v.entries()[0].weight, 1.0986, 1e-4);
    EXPECT_DOUBLE_EQ(v.entries()[0].weight, std::log(3.0));
}

TEST(BuildIdf, LnTable) {
    const auto idf = build_idf(Docs{{"x", "y"}, {"x"}});
    EXPECT_EQ(idf.idf("x"), 0.0);
    EXPECT_NEAR(*idf.idf("y"), 0.6931, 1e-4);
    EXPECT_FALSE(idf.idf("z"));
    EXPECT_EQ(idf.document_count(), 2u);
    // An empty document still counts toward N.
    const auto with_empty = build_idf(Docs{{"x"}, {}});
    EXPECT_DOUBLE_EQ(*with_empty.idf("x"), std::log(2.0));
    EXPECT_EQ(with_empty.document_count(), 2u);
    EXPECT_THROW(build_idf(Docs{}), ValidationError);
}

TEST(BuildIdf, DuplicatingCorpusLeavesIdfUnchanged) {
    util::Rng rng(8);
    for (int round = 0; round < 50; ++round) {
        Docs docs;
        const auto n = 1 + rng.below(20);
        for (std::uint64_t i = 0; i < n; ++i) {
            TokenList d;
            const auto len = rng.below(6);
            for (std::uint64_t j = 0; j < len; ++j) d.push_back(std::string(1, static_cast<char>('a' + rng.below(8))));
            docs.push_back(d);
        }
        Docs doubled = docs;
        doubled.insert(doubled.end(), docs.begin(), docs.end());
        const auto a = build_idf(docs), b = build_idf(doubled);
        ASSERT_EQ(a.vocabulary().terms(), b.vocabulary().terms());
        for (FeatureIndex i = 0; i < a.size(); ++i) EXPECT_DOUBLE_EQ(a.idf(i), b.idf(i));
    }
}

TEST(Vectorize, SchemeWeightLaws) {
    util::Rng rng(12);
    Docs docs;
    for (int i = 0; i < 30; ++i) {
        TokenList d;
        const auto len = 1 + rng.below(10);
        for (std::uint64_t j = 0; j < len; ++j) d.push_back(std::string(1, static_cast<char>('a' + rng.below(12))));
        docs.push_back(d);
    }
    const auto idf = build_idf(docs);
    const auto& vocab = idf.vocabulary();
    for (const auto& d : docs) {
        const auto tf = vectorize(d, CountingScheme::tf, vocab);
        const auto boolean = vectorize(d, CountingScheme::boolean, vocab);
        const auto tfidf = vectorize(d, CountingScheme::tfidf, vocab, &idf);
        for (const auto& e : tf) {
            EXPECT_GT(e.weight, 0.0);
            EXPECT_EQ(e.weight, std::floor(e.weight));
        }
        for (const auto& e : boolean) EXPECT_EQ(e.weight, 1.0);
        EXPECT_EQ(tf.size(), boolean.size());
        for (const auto& e : tf) {
            const double expected = e.weight * idf.idf(e.index);
            double got = 0.0;
            for (const auto& f : tfidf) {
                if (f.index == e.index) got = f.weight;
            }
            EXPECT_DOUBLE_EQ(got, expected);
        }
    }
}

TEST(CountingScheme, NamesRoundTrip) {
    for (auto s : {CountingScheme::tf, CountingScheme::boolean, CountingScheme::tfidf}) {
        EXPECT_EQ(parse_scheme(to_string(s)), s);
    }
    EXPECT_FALSE(parse_scheme("bm25"));
}
