#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "disaff/util/csv.hpp"
#include "disaff/util/date.hpp"
#include "disaff/util/hash.hpp"
#include "disaff/util/random.hpp"
#include "disaff/util/utf8.hpp"

using namespace disaff;
using namespace std::chrono;

TEST(Csv, SplitsPlainAndQuotedFields) {
    auto f = util::split_csv(R"(a,"b,c","say ""hi""",)");
    ASSERT_TRUE(f);
    EXPECT_EQ(*f, (std::vector<std::string>{"a", "b,c", "say \"hi\"", ""}));
    EXPECT_FALSE(util::split_csv(R"(a,"open)"));
    EXPECT_FALSE(util::split_csv(R"("x"y,z)"));
}

TEST(Csv, QuoteRoundTrips) {
    for (std::string s : {"plain", "with,comma", "quote\"inside", " padded ", "#hash", ""}) {
        const auto line = util::join_csv({s, "x"});
        const auto back = util::split_csv(line);
        ASSERT_TRUE(back);
        EXPECT_EQ((*back)[0], s);
    }
}

TEST(Csv, LineReaderSkipsCommentsAndCountsLines) {
    std::istringstream in("# header\n\na\r\n#x\nb\n");
    util::LineReader r(in);
    std::string line;
    ASSERT_TRUE(r.next(line));
    EXPECT_EQ(line, "a");
    EXPECT_EQ(r.line_number(), 3u);
    ASSERT_TRUE(r.next(line));
    EXPECT_EQ(line, "b");
    EXPECT_EQ(r.line_number(), 5u);
    EXPECT_FALSE(r.next(line));
}

TEST(Date, ParsesAndFormats) {
    const auto d = util::parse_date("2012-04-04");
    ASSERT_TRUE(d);
    EXPECT_EQ(util::format_date(*d), "2012-04-04");
    EXPECT_FALSE(util::parse_date("2012-02-30"));
    EXPECT_FALSE(util::parse_date("2012-4-4"));
    EXPECT_FALSE(util::parse_date("yesterday"));
}

TEST(Date, TimestampZonesNormalizeToUtc) {
    const auto z = util::parse_timestamp("2012-04-04T23:30:00Z");
    const auto plus = util::parse_timestamp("2012-04-05T01:30:00+02:00");
    const auto bare = util::parse_timestamp("2012-04-04 23:30");
    const auto frac = util::parse_timestamp("2012-04-04T23:30:00.750-0000");
    ASSERT_TRUE(z && plus && bare && frac);
    EXPECT_EQ(*z, *plus);
    EXPECT_EQ(*z, *bare);
    EXPECT_EQ(*z, *frac);
    EXPECT_EQ(util::format_timestamp(*plus), "2012-04-04T23:30:00Z");
    EXPECT_EQ(util::format_date(util::day_of(*plus)), "2012-04-04");
    EXPECT_FALSE(util::parse_timestamp("2012-04-04T25:00:00Z"));
    EXPECT_FALSE(util::parse_timestamp("2012-04-04T10:00:00Zjunk"));
}

TEST(Hash, Fnv1aKnownVectors) {
    EXPECT_EQ(util::fnv1a64(""), util::kFnvOffset);
    EXPECT_EQ(util::fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
    EXPECT_EQ(util::fnv1a64("foobar"), 0x85944171f73967e8ULL);
}

TEST(Rng, DeterministicAndBounded) {
    util::Rng a(42), b(42);
    for (int i = 0; i < 1000; ++i) {
        const auto x = a.below(7);
        EXPECT_EQ(x, b.below(7));
        EXPECT_LT(x, 7u);
        const double u = a.uniform();
        b.uniform();
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
    }
}

TEST(Rng, ShuffleIsAPermutation) {
    std::vector<int> v(100);
    std::iota(v.begin(), v.end(), 0);
    util::Rng rng(3);
    rng.shuffle(std::span<int>{v});
    auto sorted = v;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < 100; ++i) EXPECT_EQ(sorted[i], i);
}

TEST(Rng, NormalMomentsRoughlyStandard) {
    util::Rng rng(9);
    double s = 0.0, ss = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double x = rng.normal();
        s += x;
        ss += x * x;
    }
    EXPECT_NEAR(s / n, 0.0, 0.01);
    EXPECT_NEAR(ss / n, 1.0, 0.02);
}

TEST(Utf8, DecodeEncodeAndLowercase) {
    const std::string s = "Perché CITTÀ Ž";
    EXPECT_EQ(util::encode_utf8(util::decode_utf8(s)), s);
    EXPECT_EQ(util::to_lower_utf8(s), "perché città ž");
    const auto bad = util::decode_utf8(std::string("a\xff") + "b");
    ASSERT_EQ(bad.size(), 3u);
    EXPECT_EQ(bad[1], util::kReplacement);
}

TEST(Utf8, Trim) {
    EXPECT_EQ(util::trim("  x y \t\n"), "x y");
    EXPECT_EQ(util::trim("   "), "");
}
