// Randomized properties. Seeds are fixed, so every run checks the same cases.

#include <parking/builtins.hpp>
#include <parking/dir_table.hpp>
#include <parking/enumeration.hpp>
#include <parking/forest.hpp>
#include <parking/probabilistic.hpp>

#include <gtest/gtest.h>

#include <random>

namespace parking {
namespace {

DirTable random_table(std::mt19937& rng, int r_max)
{
    std::bernoulli_distribution coin(0.5);
    DirTable t;
    for (int r = 1; r <= r_max; ++r) {
        std::vector<Direction> row;
        for (int i = 1; i <= r; ++i) row.push_back(coin(rng) ? Direction::Right : Direction::Left);
        t.rows.push_back(row);
    }
    return t;
}

Word random_word(std::mt19937& rng, std::size_t length, Letter lo, Letter hi)
{
    std::uniform_int_distribution<Letter> letter(lo, hi);
    Word w(length);
    for (Letter& a : w) a = letter(rng);
    return w;
}

std::vector<Procedure> catalog()
{
    std::vector<Procedure> out;
    for (const std::string& name : builtin_names()) out.push_back(builtin(name));
    out.push_back(naples_procedure(2));
    out.push_back(far_procedure(FarConvention::Formal));
    return out;
}

TEST(Property, RunContracts)
{
    std::mt19937 rng(20240611);
    for (const Procedure& p : catalog())
        for (int trial = 0; trial < 200; ++trial) {
            Word w = random_word(rng, 1 + trial % 9, -4, 6);
            Runner<Letter> runner(p);
            SpotSet previous;
            for (Letter a : w) {
                std::optional<Block> block = runner.occupied().block_of(a);
                Spot parked = runner.feed(a);
                if (block)
                    EXPECT_TRUE(parked == block->lo - 1 || parked == block->hi + 1) << p.name();
                else
                    EXPECT_EQ(parked, a);
                for (Spot s : previous) EXPECT_TRUE(runner.occupied().contains(s));
                EXPECT_EQ(runner.occupied().size(), previous.size() + 1);
                previous = runner.occupied();
            }
            Outcome o = runner.outcome();
            std::set<Spot> distinct(o.spot_of_car().begin(), o.spot_of_car().end());
            EXPECT_EQ(distinct.size(), w.size());
        }
}

TEST(Property, ShiftInvariantProceduresCommuteWithShift)
{
    std::mt19937 rng(7);
    for (const Procedure& p : catalog()) {
        if (!p.flags().shift_invariant) continue;
        for (int trial = 0; trial < 200; ++trial) {
            Word w = random_word(rng, 1 + trial % 8, -3, 5);
            std::int64_t k = std::uniform_int_distribution<std::int64_t>(-6, 6)(rng);
            EXPECT_EQ(run<Letter>(p, shift(w, k)).occupied, shift(run<Letter>(p, w).occupied, k)) << p.name();
        }
    }
}

TEST(Property, MemorylessReplayWithoutHistory)
{
    std::mt19937 rng(11);
    for (const Procedure& p : catalog()) {
        if (!p.flags().memoryless) continue;
        for (int trial = 0; trial < 200; ++trial) {
            Word w = random_word(rng, 1 + trial % 8, -2, 5);
            SpotSet occupied;
            for (Letter a : w) {
                Spot parked = a;
                if (auto b = occupied.block_of(a)) {
                    Direction d = dir_of_set(p, occupied, a);
                    parked = d == Direction::Left ? b->lo - 1 : b->hi + 1;
                }
                occupied.insert(parked);
            }
            EXPECT_EQ(occupied, run<Letter>(p, w).occupied) << p.name();
        }
    }
}

TEST(Property, RandomTablesAreUniversal)
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 12; ++trial) {
        DirTable t = random_table(rng, 5);
        Procedure p = table_procedure(t);
        EXPECT_TRUE(check_universal(p, 5).passed()) << to_json(t);
        EXPECT_TRUE(orbit_audit(p, 4).ok()) << to_json(t);
    }
}

TEST(Property, RandomTablesShuffleFormula)
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 6; ++trial) {
        Procedure p = table_procedure(random_table(rng, 5));
        for (int s = 0; s < 20; ++s) {
            std::set<Spot> spots;
            std::size_t size = 1 + static_cast<std::size_t>(s % 5);
            while (spots.size() < size) spots.insert(std::uniform_int_distribution<Spot>(-2, 7)(rng));
            SpotSet set(std::vector<Spot>(spots.begin(), spots.end()));
            EXPECT_EQ(count_words_to_set(p, set, CountMode::Brute), count_words_to_set(p, set, CountMode::Formula));
        }
    }
}

TEST(Property, RandomTablesFibersAndCorrespondence)
{
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 6; ++trial) {
        Procedure p = table_procedure(random_table(rng, 4));
        auto brute = fiber_table_brute(p, 4);
        std::vector<std::size_t> sigma{1, 2, 3, 4};
        Count total = 0;
        do {
            Count f = fiber_count(p, sigma);
            total += f;
            auto it = brute.find(sigma);
            EXPECT_EQ(f, it == brute.end() ? Count(0) : it->second);
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        EXPECT_EQ(total, Count(125));
        EXPECT_TRUE(is_good_correspondence(p, 3).good);
    }
}

TEST(Property, RandomProbabilityTablesKeepUnitMassPerOrbit)
{
    // Any local memoryless probabilistic rule, abelian or not.
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> num(0, 6);
    for (int trial = 0; trial < 4; ++trial) {
        ProbTable t(3);
        for (int r = 1; r <= 3; ++r)
            for (int i = 1; i <= r; ++i) t.set(r, i, Rational(num(rng)) / 6);
        ProbProcedure p = table_prob_procedure(t);
        for (int r = 1; r <= 3; ++r)
            for (const auto& [rep, mass] : orbit_masses(p, r)) EXPECT_EQ(mass, Rational(1));
    }
}

TEST(Property, RandomWordsMeasuresSumToOne)
{
    std::mt19937 rng(8);
    std::vector<ProbProcedure> procs{kw_procedure(Rational(2) / 7), pq_procedure(QParam(Rational(3) / 2)),
                                     embed(lbs_procedure())};
    for (const auto& p : procs)
        for (int trial = 0; trial < 40; ++trial) {
            Word w = random_word(rng, 1 + trial % 6, -2, 4);
            EXPECT_EQ(measure(p, w).total(), Rational(1));
        }
}

TEST(Property, EncodeInjectiveOnRandomWords)
{
    std::mt19937 rng(17);
    for (const Procedure& p : catalog()) {
        std::map<ForestPair, Word> seen;
        for (int trial = 0; trial < 400; ++trial) {
            Word w = random_word(rng, 1 + trial % 6, -2, 5);
            auto [it, inserted] = seen.try_emplace(encode(p, w), w);
            if (!inserted) EXPECT_EQ(it->second, w) << p.name();
        }
    }
}

} // namespace
} // namespace parking
