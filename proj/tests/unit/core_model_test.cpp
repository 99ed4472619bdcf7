#include <parking/count.hpp>
#include <parking/spot_set.hpp>
#include <parking/word.hpp>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace parking {
namespace {

TEST(Count, DecimalRendering)
{
    EXPECT_EQ(to_string(Count(0)), "0");
    EXPECT_EQ(to_string(Count(16807)), "16807");
    Count big = ipow(10, 30);
    EXPECT_EQ(to_string(big), "1000000000000000000000000000000");
    EXPECT_EQ(parse_count(to_string(big)), big);
    EXPECT_THROW(parse_count(""), std::invalid_argument);
    EXPECT_THROW(parse_count("12a"), std::invalid_argument);
}

TEST(Count, CayleyValues)
{
    const std::vector<unsigned> expected{1, 3, 16, 125, 1296, 16807};
    for (unsigned r = 1; r <= 6; ++r) EXPECT_EQ(cayley_count(r), Count(expected[r - 1])) << r;
    EXPECT_EQ(cayley_count(0), Count(1));
}

TEST(Count, MultinomialAgainstFactorials)
{
    for (std::size_t a = 0; a <= 5; ++a)
        for (std::size_t b = 0; b <= 5; ++b)
            for (std::size_t c = 0; c <= 4; ++c) {
                std::vector<std::size_t> parts{a, b, c};
                auto n = static_cast<unsigned>(a + b + c);
                std::uint64_t expected = oracle::factorial(n) / oracle::factorial(static_cast<unsigned>(a)) /
                                         oracle::factorial(static_cast<unsigned>(b)) /
                                         oracle::factorial(static_cast<unsigned>(c));
                EXPECT_EQ(multinomial(parts), Count(expected));
            }
    EXPECT_EQ(multinomial({}), Count(1));
}

TEST(SpotSet, BlocksOfMixedSet)
{
    SpotSet s{2, 3, 5, 6, 7, 8, 9, 12};
    std::vector<Block> expected{{2, 3}, {5, 9}, {12, 12}};
    EXPECT_EQ(blocks(s), expected);
}

TEST(SpotSet, EmptyAndInterval)
{
    EXPECT_TRUE(blocks(SpotSet{}).empty());
    std::vector<Block> one{{1, 3}};
    EXPECT_EQ(blocks(SpotSet{1, 2, 3}), one);
    EXPECT_TRUE(SpotSet::interval(1, 3).is_interval(1, 3));
    EXPECT_TRUE(SpotSet::interval(4, 3).empty());
}

TEST(SpotSet, UnsortedInputAndDuplicates)
{
    SpotSet s{5, 1, 2};
    EXPECT_EQ(s.spots(), (std::vector<Spot>{1, 2, 5}));
    EXPECT_EQ(s.to_string(), "{1,2,5}");
    EXPECT_EQ(SpotSet{}.to_string(), "{}");
}

TEST(SpotSet, InsertMergesNeighbours)
{
    SpotSet s{1, 3};
    s.insert(2);
    std::vector<Block> one{{1, 3}};
    EXPECT_EQ(s.blocks(), one);
    s.insert(-1);
    EXPECT_EQ(s.blocks().size(), 2u);
    EXPECT_EQ(s.block_of(2), (Block{1, 3}));
    EXPECT_FALSE(s.block_of(0).has_value());
    EXPECT_THROW(s.insert(3), std::logic_error);
}

TEST(SpotSet, ShiftMovesEverySpot)
{
    EXPECT_EQ(shift(SpotSet{2, 3, 5}, 1), (SpotSet{3, 4, 6}));
    EXPECT_EQ(shift(SpotSet{2, 3, 5}, 0), (SpotSet{2, 3, 5}));
}

TEST(SpotSet, BlocksCommuteWithShift)
{
    for (const auto& w : oracle::all_words(4, -2, 4)) {
        std::set<Spot> distinct(w.begin(), w.end());
        SpotSet s(std::vector<Spot>(distinct.begin(), distinct.end()));
        for (std::int64_t k : {-3, 1, 5}) {
            auto shifted = blocks(shift(s, k));
            auto original = blocks(s);
            ASSERT_EQ(shifted.size(), original.size());
            for (std::size_t i = 0; i < original.size(); ++i) {
                EXPECT_EQ(shifted[i].lo, original[i].lo + k);
                EXPECT_EQ(shifted[i].hi, original[i].hi + k);
            }
        }
    }
}

TEST(SpotSet, BlocksAreMaximalAndCoverTheSet)
{
    for (const auto& w : oracle::all_words(5, 0, 6)) {
        SpotSet s(w);
        std::size_t covered = 0;
        const auto& bs = s.blocks();
        for (std::size_t i = 0; i < bs.size(); ++i) {
            EXPECT_LE(bs[i].lo, bs[i].hi);
            covered += bs[i].size();
            if (i) EXPECT_GE(bs[i].lo, bs[i - 1].hi + 2);
        }
        EXPECT_EQ(covered, s.size());
    }
}

TEST(Word, Shift)
{
    EXPECT_EQ(shift(Word{5, 2, 3}, 1), (Word{6, 3, 4}));
    EXPECT_EQ(shift(Word{1, 2}, 0), (Word{1, 2}));
    EXPECT_TRUE(shift(Word{}, 3).empty());
}

TEST(Word, RotateWrapsAround)
{
    EXPECT_EQ(rotate(Word{1, 3, 1}, 3), (Word{2, 4, 2}));
    EXPECT_EQ(rotate(Word{4, 2, 4}, 3), (Word{1, 3, 1}));
    Word w{2, 4, 1};
    Word v = w;
    for (int k = 0; k < 4; ++k) v = rotate(v, 3);
    EXPECT_EQ(v, w);
}

TEST(Word, RotateRejectsLettersOutsideWindow)
{
    EXPECT_THROW(rotate(Word{0, 1}, 3), std::domain_error);
    EXPECT_THROW(rotate(Word{5}, 3), std::domain_error);
}

TEST(Word, CyclicOrbitMembers)
{
    auto a = cyclic_orbit(Word{1, 3, 1}, 3);
    EXPECT_EQ(a.members, (std::set<Word>{{1, 3, 1}, {2, 4, 2}, {3, 1, 3}, {4, 2, 4}}));
    EXPECT_EQ(a.modulus, 4);
    auto b = cyclic_orbit(Word{1, 3, 3}, 3);
    EXPECT_EQ(b.members, (std::set<Word>{{1, 3, 3}, {2, 4, 4}, {3, 1, 1}, {4, 2, 2}}));
}

TEST(Word, ConstantWordOrbitIsAllConstants)
{
    auto orbit = cyclic_orbit(Word{1, 1, 1}, 3);
    EXPECT_EQ(orbit.members, (std::set<Word>{{1, 1, 1}, {2, 2, 2}, {3, 3, 3}, {4, 4, 4}}));
}

TEST(Word, OrbitsPartitionWordSpace)
{
    for (int r = 1; r <= 4; ++r) {
        std::set<std::set<Word>> orbits;
        std::size_t words = 0;
        for (const auto& w : oracle::all_words(static_cast<std::size_t>(r), 1, r + 1)) {
            ++words;
            orbits.insert(cyclic_orbit(w, r).members);
        }
        std::size_t total = 0;
        std::set<Word> seen;
        for (const auto& o : orbits) {
            total += o.size();
            for (const auto& w : o) EXPECT_TRUE(seen.insert(w).second);
        }
        EXPECT_EQ(total, words);
        EXPECT_EQ(total, oracle::power(static_cast<std::uint64_t>(r + 1), static_cast<unsigned>(r)));
    }
}

TEST(Word, ShuffleCounts)
{
    std::vector<Word> one{{1, 2}};
    EXPECT_EQ(shuffle_count(one), Count(1));
    std::vector<Word> two{{1}, {2}};
    EXPECT_EQ(shuffle_count(two), Count(2));
    std::vector<Word> three{{1, 2}, {3}, {4}};
    EXPECT_EQ(shuffle_count(three), Count(12));
    EXPECT_EQ(shuffles(three).size(), 12u);
}

TEST(Word, ShufflesMatchExplicitGeneration)
{
    std::vector<std::vector<Word>> cases{
        {{1, 2}, {3}, {4}}, {{1, 2, 3}, {4, 5}}, {{1}, {2}, {3}, {4}}, {{7, 8}, {}, {9, 10}}, {}};
    for (const auto& parts : cases) {
        auto mine = shuffles(parts);
        auto theirs = oracle::shuffles(parts);
        std::sort(mine.begin(), mine.end());
        std::sort(theirs.begin(), theirs.end());
        EXPECT_EQ(mine, theirs);
        EXPECT_EQ(Count(mine.size()), shuffle_count(parts));
        EXPECT_EQ(std::set<Word>(mine.begin(), mine.end()).size(), mine.size());
    }
}

TEST(Word, ShufflePreservesInternalOrder)
{
    std::vector<Word> parts{{1, 2, 3}, {10, 20}};
    for (const Word& w : shuffles(parts)) {
        Word a, b;
        for (Letter x : w) (x < 10 ? a : b).push_back(x);
        EXPECT_EQ(a, parts[0]);
        EXPECT_EQ(b, parts[1]);
    }
}

TEST(Word, FormatAndParse)
{
    Word w{1, -2, 13};
    EXPECT_EQ(format_word(w), "1,-2,13");
    EXPECT_EQ(parse_word("1,-2,13"), w);
    EXPECT_EQ(parse_word(" 1, 2"), (Word{1, 2}));
    EXPECT_TRUE(parse_word("").empty());
    EXPECT_EQ(format_compact(Word{1, 3, 1}), "131");
    EXPECT_THROW(parse_word("1,,2"), std::invalid_argument);
    EXPECT_THROW(parse_word("1,a"), std::invalid_argument);
    EXPECT_THROW(parse_word("1,"), std::invalid_argument);
}

TEST(Word, ForEachWordIsLexicographic)
{
    std::vector<Word> seen;
    for_each_word(2, 1, 3, [&](const Word& w) { seen.push_back(w); });
    EXPECT_EQ(seen, oracle::all_words(2, 1, 3));
    seen.clear();
    for_each_word(3, 1, 2, [&](const Word& w) { seen.push_back(w); }, Word{2});
    EXPECT_EQ(seen.size(), 4u);
    for (const auto& w : seen) EXPECT_EQ(w.front(), 2);
    seen.clear();
    for_each_word(0, 1, 2, [&](const Word& w) { seen.push_back(w); });
    EXPECT_EQ(seen, std::vector<Word>{Word{}});
}

} // namespace
} // namespace parking
