#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "oracles.hpp"
#include "wordlab/classifiers.hpp"
#include "wordlab/generators.hpp"

using namespace wordlab;

namespace {

std::vector<std::string> collect(const AllWords& words) {
    std::vector<std::string> out;
    for (const auto& w : words) out.push_back(w.str());
    return out;
}

}  // namespace

TEST(AllWords, Examples) {
    EXPECT_EQ(collect(all_words(Alphabet("ab"), 2)), (std::vector<std::string>{"aa", "ab", "ba", "bb"}));
    EXPECT_EQ(collect(all_words(Alphabet("ab"), 5)).size(), 32U);
    EXPECT_EQ(collect(all_words(Alphabet("a"), 3)), (std::vector<std::string>{"aaa"}));
    EXPECT_EQ(collect(all_words(Alphabet("ab"), 0)), (std::vector<std::string>{""}));
}

TEST(AllWords, OrderFollowsAlphabet) {
    EXPECT_EQ(collect(all_words(Alphabet("ba"), 2)), (std::vector<std::string>{"bb", "ba", "ab", "aa"}));
    for (std::size_t n = 0; n <= 6; ++n) {
        const auto words = collect(all_words(Alphabet("abc"), n));
        EXPECT_EQ(words, oracle::words("abc", n));
        for (std::uint64_t i = 0; i < words.size(); ++i) EXPECT_EQ(word_at(Alphabet("abc"), n, i).str(), words[i]);
    }
}

TEST(Christoffel, LowerExamples) {
    EXPECT_EQ(lower_christoffel({1, 1}).str(), "ab");
    EXPECT_EQ(lower_christoffel({1, 2}).str(), "aab");
    EXPECT_EQ(lower_christoffel({2, 1}).str(), "abb");
    EXPECT_EQ(lower_christoffel({2, 3}).str(), "aabab");
    EXPECT_THROW(lower_christoffel({2, 4}), std::invalid_argument);
    EXPECT_THROW(lower_christoffel({0, 1}), std::invalid_argument);
}

TEST(Christoffel, CentralExamples) {
    EXPECT_EQ(central_word({1, 2}).str(), "a");
    EXPECT_EQ(central_word({1, 1}).str(), "");
    EXPECT_EQ(central_word({2, 3}).str(), "aba");
    EXPECT_THROW(central_word({3, 3}), std::invalid_argument);
}

TEST(Christoffel, LetterCounts) {
    for (std::uint64_t p = 1; p < 30; ++p) {
        for (std::uint64_t q = 1; q < 30; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const auto w = lower_christoffel({p, q}).str();
            ASSERT_EQ(static_cast<std::uint64_t>(std::count(w.begin(), w.end(), 'a')), q);
            ASSERT_EQ(static_cast<std::uint64_t>(std::count(w.begin(), w.end(), 'b')), p);
        }
    }
}

TEST(Christoffel, CentralWordsSatisfyAllThreeFaces) {
    for (std::uint64_t total = 2; total <= 20; ++total) {
        for (std::uint64_t p = 1; p < total; ++p) {
            if (std::gcd(p, total - p) != 1) continue;
            const auto w = central_word({p, total - p});
            ASSERT_TRUE(is_sturmian_palindrome(w)) << w.str();
            ASSERT_TRUE(condition_B_prime(w)) << w.str();
            ASSERT_TRUE(is_palindrome(w) && is_trapezoidal(w)) << w.str();
        }
    }
}

TEST(SturmianCorpus, Examples) {
    const auto small = sturmian_corpus(3, 2);
    for (const char* s : {"ab", "ba", "aa"}) EXPECT_TRUE(small.count(Word(s))) << s;
    for (const auto& w : small) EXPECT_LE(w.size(), 2U);

    const auto tiny = sturmian_corpus(2, 5);
    for (const char* s : {"", "a", "b", "ab"}) EXPECT_TRUE(tiny.count(Word(s))) << s;
}

TEST(SturmianCorpus, MembersAreSturmianRichAndTrapezoidal) {
    for (const auto& w : sturmian_corpus(12, 8)) {
        ASSERT_TRUE(is_finite_sturmian(w)) << w.str();
        ASSERT_TRUE(is_rich_by_count(w)) << w.str();
        ASSERT_TRUE(is_trapezoidal(w)) << w.str();
    }
}

TEST(RandomWords, ShapeAndDeterminism) {
    const Alphabet ab("ab");
    EXPECT_TRUE(random_words(ab, 10, 0, 1).empty());
    const auto a = random_words(ab, 10, 5, 99);
    EXPECT_EQ(a.size(), 5U);
    for (const auto& w : a) EXPECT_EQ(w.size(), 10U);
    EXPECT_EQ(a, random_words(ab, 10, 5, 99));
    EXPECT_NE(a, random_words(ab, 10, 5, 100));
}

TEST(RandomWords, RoughlyUniformLetters) {
    const auto words = random_words(Alphabet("abc"), 100, 300, 5);
    std::array<long, 3> counts{};
    for (const auto& w : words) {
        for (char c : w.view()) ++counts[static_cast<std::size_t>(c - 'a')];
    }
    for (long c : counts) EXPECT_NEAR(static_cast<double>(c) / 30000.0, 1.0 / 3.0, 0.02);
}
