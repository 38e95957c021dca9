#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <string>

#include "oracles.hpp"
#include "wordlab/complexity.hpp"

using namespace wordlab;

namespace {

std::set<std::string> strings(const std::set<Word>& ws) {
    std::set<std::string> out;
    for (const auto& w : ws) out.insert(w.str());
    return out;
}

using V = std::vector<long>;

}  // namespace

TEST(SubwordComplexity, Examples) {
    EXPECT_EQ(subword_complexity("aba").values, (V{1, 2, 2, 1, 0}));
    EXPECT_EQ(subword_complexity("aaabab").values, (V{1, 2, 3, 4, 3, 2, 1, 0}));
    EXPECT_EQ(subword_complexity("").values, (V{1, 0}));
}

TEST(PalindromicComplexity, Examples) {
    EXPECT_EQ(palindromic_complexity("aba").values, (V{1, 2, 0, 1, 0}));
    EXPECT_EQ(palindromic_complexity("aabbaa").values, (V{1, 2, 2, 0, 1, 0, 1, 0}));
    EXPECT_EQ(palindromic_complexity("a").values, (V{1, 1, 0}));
}

TEST(Profiles, MatchOraclesAndBounds) {
    auto check = [](const std::string& w, std::size_t k) {
        const auto c = subword_complexity(w);
        const auto p = palindromic_complexity(w);
        ASSERT_EQ(c.values, oracle::complexity(w)) << w;
        ASSERT_EQ(p.values, oracle::palindromic_complexity(w)) << w;
        const std::size_t n = w.size();
        ASSERT_EQ(c.values[0], 1);
        ASSERT_EQ(c.values[n + 1], 0);
        ASSERT_EQ(p.values[n + 1], 0);
        if (n > 0) {
            ASSERT_EQ(c.values[n], 1);
        }
        long sum = 0;
        for (std::size_t i = 0; i <= n; ++i) {
            ASSERT_LE(c.values[i], static_cast<long>(n - i + 1));
            ASSERT_LE(static_cast<double>(c.values[i]), std::pow(static_cast<double>(k), static_cast<double>(i)));
            ASSERT_LE(p.values[i], c.values[i]);
            sum += p.values[i];
        }
        ASSERT_EQ(sum, static_cast<long>(palindromic_factors(w).size()));
    };
    oracle::for_each_word("ab", 12, [&](const std::string& w) { check(w, 2); });
    oracle::for_each_word("abc", 7, [&](const std::string& w) { check(w, 3); });
}

TEST(DifferenceProfile, Examples) {
    const auto d1 = difference_profile("aaabab");
    EXPECT_EQ(d1.values, (V{1, 1, 1, -1, -1, -1}));
    ASSERT_TRUE(d1.runs);
    EXPECT_EQ(*d1.runs, (TrapezoidRuns{3, 0}));

    const auto d2 = difference_profile("aabbaa");
    EXPECT_EQ(d2.values, (V{1, 2, 0, -1, -1, -1}));
    EXPECT_FALSE(d2.runs);

    const auto d3 = difference_profile("a");
    EXPECT_EQ(d3.values, (V{0}));
    ASSERT_TRUE(d3.runs);
    EXPECT_EQ(*d3.runs, (TrapezoidRuns{0, 1}));

    EXPECT_THROW(difference_profile(""), std::invalid_argument);
}

TEST(DifferenceProfile, SumsToZero) {
    oracle::for_each_word("ab", 14, [](const std::string& w) {
        if (w.empty()) return;
        long sum = 0;
        for (long v : difference_profile(w).values) sum += v;
        ASSERT_EQ(sum, 0) << w;
    });
}

TEST(TrapezoidRuns, ShapeMatching) {
    EXPECT_EQ(trapezoid_runs({}), (TrapezoidRuns{0, 0}));
    EXPECT_EQ(trapezoid_runs({1, 0, 0, -1}), (TrapezoidRuns{1, 2}));
    EXPECT_FALSE(trapezoid_runs({1, 1, 0, -1}));
    EXPECT_FALSE(trapezoid_runs({1, -1, 0}));
    EXPECT_FALSE(trapezoid_runs({0, 1, -1}));
}

TEST(RightSpecialFactors, Examples) {
    EXPECT_EQ(strings(right_special_factors("aaabab", 1)), (std::set<std::string>{"a"}));
    EXPECT_EQ(strings(right_special_factors("aaabab", 2)), (std::set<std::string>{"aa"}));
    EXPECT_TRUE(right_special_factors("aabbaa", 2).empty());
    EXPECT_EQ(strings(right_special_factors("ab", 0)), (std::set<std::string>{""}));
    EXPECT_TRUE(right_special_factors("aaa", 0).empty());
    EXPECT_THROW(right_special_factors("ab", 3), std::invalid_argument);
}

TEST(Indices, Examples) {
    EXPECT_EQ(r_index("aaabab"), 3U);
    EXPECT_EQ(r_index("aabbaa"), 2U);
    EXPECT_EQ(r_index("aaaaa"), 0U);
    EXPECT_EQ(r_index(""), 0U);

    EXPECT_EQ(k_index("aaabab"), 3U);
    EXPECT_EQ(k_index("aabbaa"), 3U);
    EXPECT_EQ(k_index("a"), 1U);
    EXPECT_EQ(k_index(""), 0U);

    EXPECT_EQ(minimal_period("aaabab"), 6U);
    EXPECT_EQ(minimal_period("aabbaa"), 4U);
    EXPECT_EQ(minimal_period("aaaa"), 1U);
    EXPECT_THROW(minimal_period(""), std::invalid_argument);
}

TEST(Indices, MatchOraclesAndPeriodInequality) {
    auto check = [](const std::string& w) {
        ASSERT_EQ(r_index(w), oracle::r_index(w)) << w;
        ASSERT_EQ(k_index(w), oracle::k_index(w)) << w;
        for (std::size_t n = 0; n <= w.size(); ++n) {
            ASSERT_EQ(strings(right_special_factors(w, n)), oracle::right_special(w, n)) << w;
        }
        if (w.empty()) return;
        const auto idx = structural_indices(w);
        ASSERT_EQ(idx.min_period, oracle::period(w)) << w;
        ASSERT_GE(idx.min_period, idx.r_index + 1) << w;
        ASSERT_GE(idx.k_index, 1U);
        ASSERT_LE(idx.k_index, w.size());
        ASSERT_LE(idx.r_index, w.size());
    };
    oracle::for_each_word("ab", 11, check);
    oracle::for_each_word("abc", 6, check);
}

TEST(Indices, PeriodInequalityExhaustiveBinary14) {
    oracle::for_each_word("ab", 14, [](const std::string& w) {
        if (w.empty()) return;
        ASSERT_GE(minimal_period(w), r_index(w) + 1) << w;
        ASSERT_EQ(minimal_period(w), oracle::period(w)) << w;
    });
}
