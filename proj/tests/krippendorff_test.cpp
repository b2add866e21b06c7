#include <gtest/gtest.h>

#include "disaff/corpus/krippendorff.hpp"
#include "disaff/util/random.hpp"
#include "oracles.hpp"

using namespace disaff;
using namespace disaff::corpus;

TEST(Krippendorff, PerfectAgreementIsOne) {
    EXPECT_EQ(krippendorff_alpha_nominal({{1, 1}, {0, 0}, {1, 1, 1}}), 1.0);
    EXPECT_EQ(krippendorff_alpha_nominal({{2, 2}, {2, 2}}), 1.0);
}

TEST(Krippendorff, WorkedFourUnitFixture) {
    // (a,a), (a,b), (b,b), (b,b): D_o = 1/4, D_e = 30/56, alpha = 8/15.
    const double alpha = krippendorff_alpha_nominal({{0, 0}, {0, 1}, {1, 1}, {1, 1}});
    EXPECT_NEAR(alpha, 8.0 / 15.0, 1e-12);
    EXPECT_NEAR(alpha, 0.5333, 1e-4);
    EXPECT_NEAR(oracle::krippendorff_nominal({{"a", "a"}, {"a", "b"}, {"b", "b"}, {"b", "b"}}), 8.0 / 15.0, 1e-12);
}

TEST(Krippendorff, UnpairableUnitsExcluded) {
    EXPECT_NEAR(krippendorff_alpha_nominal({{0, 0}, {0, 1}, {1, 1}, {1, 1}, {0}, {1}}), 8.0 / 15.0, 1e-12);
    EXPECT_THROW(krippendorff_alpha_nominal({{0}, {1}}), ValidationError);
    EXPECT_THROW(krippendorff_alpha_nominal({}), ValidationError);
}

TEST(Krippendorff, MatchesOracleAndIsRenamingInvariant) {
    util::Rng rng(5);
    for (int round = 0; round < 200; ++round) {
        std::vector<std::vector<int>> units;
        std::vector<std::vector<std::string>> named, renamed;
        const auto n = 2 + rng.below(20);
        const int k = 2 + static_cast<int>(rng.below(3));
        for (std::uint64_t u = 0; u < n; ++u) {
            std::vector<int> vals;
            std::vector<std::string> a, b;
            const auto m = 1 + rng.below(4);
            for (std::uint64_t c = 0; c < m; ++c) {
                const int v = static_cast<int>(rng.below(k));
                vals.push_back(v);
                a.push_back("v" + std::to_string(v));
                b.push_back("w" + std::to_string((v + 1) % k));
            }
            units.push_back(vals);
            named.push_back(a);
            renamed.push_back(b);
        }
        bool pairable = false;
        for (const auto& u : units) pairable |= u.size() >= 2;
        if (!pairable) continue;
        const double alpha = krippendorff_alpha_nominal(units);
        EXPECT_NEAR(alpha, oracle::krippendorff_nominal(named), 1e-12);
        EXPECT_NEAR(alpha, oracle::krippendorff_nominal(renamed), 1e-12);
    }
}

TEST(Krippendorff, OverAnnotations) {
    const std::vector<Annotation> a{
        {"1", "x", true, Sentiment::negative}, {"1", "y", true, Sentiment::negative},
        {"2", "x", true, Sentiment::negative}, {"2", "y", true, Sentiment::non_negative},
        {"3", "x", false, std::nullopt},       {"3", "y", false, std::nullopt},
        {"4", "x", false, std::nullopt},       {"4", "y", false, std::nullopt},
    };
    EXPECT_EQ(krippendorff_alpha(a, CodedVariable::political), 1.0);
    // Sentiment: units 1 (n,n) and 2 (n,o); only "n"/"o" pairs count.
    EXPECT_NEAR(krippendorff_alpha(a, CodedVariable::sentiment),
                oracle::krippendorff_nominal({{"n", "n"}, {"n", "o"}}), 1e-12);
}
