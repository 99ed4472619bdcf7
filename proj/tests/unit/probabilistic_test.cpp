#include <parking/builtins.hpp>
#include <parking/enumeration.hpp>
#include <parking/probabilistic.hpp>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace parking {
namespace {

Rational R(std::int64_t n, std::int64_t d = 1) { return Rational(n) / d; }

TEST(RationalText, FormatAndParse)
{
    EXPECT_EQ(to_string(R(3)), "3/1");
    EXPECT_EQ(to_string(R(2, 4)), "1/2");
    EXPECT_EQ(to_string(R(-1, 3)), "-1/3");
    EXPECT_EQ(parse_rational("3"), R(3));
    EXPECT_EQ(parse_rational("-2"), R(-2));
    EXPECT_EQ(parse_rational("6/4"), R(3, 2));
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("1/"), std::invalid_argument);
    EXPECT_THROW(parse_rational("x"), std::invalid_argument);
    EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(QParamText, InfinityAndErrors)
{
    EXPECT_TRUE(parse_q("inf").is_infinite());
    EXPECT_EQ(parse_q("inf").to_string(), "inf");
    EXPECT_EQ(parse_q("1/2").value(), R(1, 2));
    EXPECT_THROW(parse_q("-1"), std::invalid_argument);
    EXPECT_THROW(QParam(R(-1)), std::domain_error);
    EXPECT_THROW(QParam::infinity().value(), std::domain_error);
}

TEST(QInteger, Values)
{
    EXPECT_EQ(q_integer(3, R(1)), R(3));
    EXPECT_EQ(q_integer(3, R(2)), R(7));
    EXPECT_EQ(q_integer(1, R(5)), R(1));
    EXPECT_EQ(q_integer(4, R(0)), R(1));
    EXPECT_THROW(q_integer(0, R(1)), std::domain_error);
}

TEST(QInteger, RatioAtInfinityIsTheLimit)
{
    EXPECT_EQ(q_ratio(2, 4, QParam::infinity()), R(0));
    EXPECT_EQ(q_ratio(3, 3, QParam::infinity()), R(1));
    EXPECT_THROW(q_ratio(4, 3, QParam::infinity()), std::domain_error);
    EXPECT_EQ(q_ratio(2, 4, QParam(R(2))), R(3, 15));
    // Large q approaches the limit from above.
    EXPECT_LT(q_ratio(2, 4, QParam(R(1000))), R(1, 100000));
}

TEST(Measure, EmptyWord)
{
    Measure m = measure(kw_procedure(R(1, 2)), Word{});
    EXPECT_EQ(m.support().size(), 1u);
    EXPECT_EQ(m.at(SpotSet{}), R(1));
}

TEST(Measure, KwOnDoubleOne)
{
    for (Rational q : {R(0), R(1, 3), R(1, 2), R(1)}) {
        Measure m = measure(kw_procedure(q), Word{1, 1});
        EXPECT_EQ(m.at(SpotSet{0, 1}), 1 - q);
        EXPECT_EQ(m.at(SpotSet{1, 2}), q);
        EXPECT_EQ(m.total(), R(1));
        EXPECT_EQ(parking_probability(kw_procedure(q), Word{1, 1}), q);
    }
    EXPECT_EQ(measure(kw_procedure(R(1)), Word{1, 1}).support().size(), 1u);
}

TEST(Measure, PqSingleCar)
{
    Measure m = measure(pq_procedure(QParam(R(2))), Word{1});
    EXPECT_EQ(m.at(SpotSet{1}), R(1));
    EXPECT_EQ(m.at(SpotSet{2}), R(0));
}

TEST(ParkingProbability, PqOnDoubleOne)
{
    for (Rational q : {R(0), R(1, 2), R(1), R(2), R(3)})
        EXPECT_EQ(parking_probability(pq_procedure(QParam(q)), Word{1, 1}), 1 / (1 + q));
    EXPECT_EQ(parking_probability(pq_procedure(QParam::infinity()), Word{1, 1}), R(0));
}

TEST(ParkingProbability, PermutationsAlwaysPark)
{
    Word w{1, 2, 3, 4};
    do {
        EXPECT_EQ(parking_probability(pq_procedure(QParam(R(2))), w), R(1));
        EXPECT_EQ(parking_probability(kw_procedure(R(1, 3)), w), R(1));
    } while (std::next_permutation(w.begin(), w.end()));
}

TEST(Measure, HandComputedThreeCars)
{
    // KW(q) on 111: car 2 goes to 0 or 2; car 3 then sees {0,1} or {1,2}.
    Rational q = R(1, 3);
    Measure m = measure(kw_procedure(q), Word{1, 1, 1});
    EXPECT_EQ(m.at(SpotSet{-1, 0, 1}), (1 - q) * (1 - q));
    EXPECT_EQ(m.at(SpotSet{0, 1, 2}), 2 * q * (1 - q));
    EXPECT_EQ(m.at(SpotSet{1, 2, 3}), q * q);
}

TEST(Measure, SumsToOne)
{
    std::vector<ProbProcedure> procs{kw_procedure(R(1, 3)), pq_procedure(QParam(R(2))),
                                     kw_sequence_procedure({R(1, 2), R(1, 5)}), embed(lbs_procedure())};
    for (const auto& p : procs)
        for (std::size_t r = 1; r <= 4; ++r)
            for (const auto& w : oracle::all_words(r, 1, 3)) EXPECT_EQ(measure(p, w).total(), R(1)) << p.name();
}

TEST(Measure, EmbeddedDeterministicIsPointMass)
{
    for (const std::string& name : builtin_names()) {
        Procedure p = builtin(name);
        ProbProcedure e = embed(p);
        for (std::size_t r = 1; r <= 3; ++r)
            for (const auto& w : oracle::all_words(r, 0, 3)) {
                Measure m = measure(e, w);
                ASSERT_EQ(m.support().size(), 1u) << name;
                EXPECT_EQ(m.support().begin()->first, run<Letter>(p, w).occupied) << name;
            }
    }
}

TEST(Measure, RejectsProbabilityOutsideUnitInterval)
{
    ProbProcedure bad("bad", {true, true, true},
                      [](const State&, std::span<const Letter>, const SpotSet&, const Block&, Letter) {
                          return Rational(2);
                      });
    EXPECT_THROW(measure(bad, Word{1, 1}), std::logic_error);
    EXPECT_NO_THROW(measure(bad, Word{1, 2}));
}

TEST(TotalMass, Examples)
{
    EXPECT_EQ(total_parking_mass(kw_procedure(R(1, 2)), 2), R(3));
    EXPECT_EQ(total_parking_mass(pq_procedure(QParam(R(1))), 3), R(16));
    EXPECT_EQ(total_parking_mass(pq_procedure(QParam(R(7))), 1), R(1));
}

TEST(TotalMass, UniversalForLocalProcedures)
{
    std::vector<ProbProcedure> procs{kw_procedure(R(0)), kw_procedure(R(1, 3)), kw_procedure(R(1, 2)),
                                     kw_procedure(R(1)), pq_procedure(QParam(R(0))), pq_procedure(QParam(R(1, 2))),
                                     pq_procedure(QParam(R(1))), pq_procedure(QParam(R(2))),
                                     pq_procedure(QParam::infinity())};
    for (const auto& p : procs)
        for (int r = 1; r <= 4; ++r)
            EXPECT_EQ(total_parking_mass(p, r), Rational(static_cast<std::uint64_t>(cayley_count(r))))
                << p.name() << " " << r;
}

TEST(TotalMass, CapAndDomain)
{
    EXPECT_THROW(total_parking_mass(kw_procedure(R(1, 2)), 6), CapExceeded);
    EXPECT_THROW(total_parking_mass(kw_procedure(R(1, 2)), 0), std::domain_error);
}

TEST(OrbitMass, OnePerOrbit)
{
    std::vector<ProbProcedure> procs{pq_procedure(QParam(R(1, 2))), kw_procedure(R(1, 3)),
                                     kw_sequence_procedure({R(1, 4), R(2, 3), R(1, 2)})};
    for (const auto& p : procs)
        for (int r = 1; r <= 4; ++r) {
            auto masses = orbit_masses(p, r);
            EXPECT_EQ(masses.size(), static_cast<std::size_t>(cayley_count(static_cast<unsigned>(r))));
            for (const auto& [rep, mass] : masses) {
                EXPECT_EQ(rep.front(), 1);
                EXPECT_EQ(mass, R(1)) << p.name() << " " << format_word(rep);
            }
        }
}

TEST(PqProcedure, Tables)
{
    ProbTable one = probability_table(pq_procedure(QParam(R(1))), 4);
    ProbTable zero = probability_table(pq_procedure(QParam(R(0))), 4);
    ProbTable inf = probability_table(pq_procedure(QParam::infinity()), 4);
    for (int r = 1; r <= 4; ++r)
        for (int i = 1; i <= r; ++i) {
            EXPECT_EQ(one.at(r, i), R(i, r + 1));
            EXPECT_EQ(zero.at(r, i), R(1));
            EXPECT_EQ(inf.at(r, i), R(0));
        }
    EXPECT_EQ(pq_table(QParam(R(3)), 4), probability_table(pq_procedure(QParam(R(3))), 4));
}

TEST(PqProcedure, ExtremesAreDeterministic)
{
    for (const auto& w : oracle::all_words(3, 1, 4)) {
        EXPECT_EQ(measure(pq_procedure(QParam(R(0))), w), measure(embed(right_procedure()), w));
        EXPECT_EQ(measure(pq_procedure(QParam::infinity()), w), measure(embed(left_procedure()), w));
    }
}

TEST(ProbBuiltin, Specs)
{
    EXPECT_EQ(parking_probability(prob_builtin(parse_proc_spec("kw:q=1/2")), Word{1, 1}), R(1, 2));
    EXPECT_EQ(parking_probability(prob_builtin(parse_proc_spec("pq:q=inf")), Word{1, 1}), R(0));
    EXPECT_EQ(parking_probability(prob_builtin(parse_proc_spec("kwseq:q=1/2+1/3")), Word{1, 1}), R(1, 3));
    EXPECT_EQ(parking_probability(prob_builtin(parse_proc_spec("right")), Word{1, 1}), R(1));
    EXPECT_THROW(prob_builtin(parse_proc_spec("kw")), std::invalid_argument);
    EXPECT_THROW(prob_builtin(parse_proc_spec("kw:q=2")), std::invalid_argument);
    EXPECT_THROW(prob_builtin(parse_proc_spec("kw:p=1/2")), std::invalid_argument);
    EXPECT_THROW(prob_builtin(parse_proc_spec("nosuch")), std::invalid_argument);
}

TEST(Abelian, PqAndRight)
{
    EXPECT_TRUE(is_abelian(pq_procedure(QParam(R(2))), 4).abelian);
    EXPECT_TRUE(is_abelian(pq_procedure(QParam(R(1))), 4).abelian);
    EXPECT_TRUE(is_abelian(embed(right_procedure()), 4).abelian);
}

TEST(Abelian, KwHalfHasWitness)
{
    AbelianReport report = is_abelian(kw_procedure(R(1, 2)), 3);
    EXPECT_FALSE(report.abelian);
    ASSERT_TRUE(report.witness.has_value());
    auto [u, v] = *report.witness;
    EXPECT_NE(measure(kw_procedure(R(1, 2)), u), measure(kw_procedure(R(1, 2)), v));
    std::sort(u.begin(), u.end());
    std::sort(v.begin(), v.end());
    EXPECT_EQ(u, v);
}

TEST(Abelian, KwHalfSmallestWitnessByHand)
{
    // 112: car 3 finds {0,1} or {1,2}. 121: car 3 always finds the block {1,2}.
    ProbProcedure p = kw_procedure(R(1, 2));
    EXPECT_NE(measure(p, Word{1, 1, 2}), measure(p, Word{1, 2, 1}));
    EXPECT_EQ(parking_probability(p, Word{1, 1, 2}), R(1, 4));
    EXPECT_EQ(parking_probability(p, Word{1, 2, 1}), R(1, 2));
    EXPECT_EQ(measure(p, Word{1, 1, 2}).at(SpotSet{0, 1, 2}), R(3, 4));
    EXPECT_EQ(measure(p, Word{1, 2, 1}).at(SpotSet{0, 1, 2}), R(1, 2));
    EXPECT_EQ(measure(p, Word{1, 1, 1}).at(SpotSet{-1, 0, 1}), R(1, 4));
}

TEST(Uniqueness, PqTablesPass)
{
    UniquenessReport report = abelian_uniqueness_check(pq_table(QParam(R(3)), 5), 5);
    EXPECT_TRUE(report.passed());
    EXPECT_TRUE(report.matches_pq);
    EXPECT_EQ(report.q, QParam(R(3)));
    EXPECT_TRUE(abelian_uniqueness_check(pq_table(QParam::infinity(), 5), 5).passed());
    EXPECT_TRUE(abelian_uniqueness_check(pq_table(QParam::infinity(), 5), 5).q.is_infinite());
}

TEST(Uniqueness, AllOnesIsRight)
{
    ProbTable ones(5);
    for (int r = 1; r <= 5; ++r)
        for (int i = 1; i <= r; ++i) ones.set(r, i, R(1));
    UniquenessReport report = abelian_uniqueness_check(ones, 5);
    EXPECT_TRUE(report.passed());
    EXPECT_EQ(report.q, QParam(R(0)));
}

TEST(Uniqueness, ConstantHalfFailsFirstRecurrence)
{
    ProbTable half(2);
    for (int r = 1; r <= 2; ++r)
        for (int i = 1; i <= r; ++i) half.set(r, i, R(1, 2));
    UniquenessReport report = abelian_uniqueness_check(half, 2);
    ASSERT_FALSE(report.passed());
    EXPECT_EQ(report.failure->r, 2);
    EXPECT_EQ(report.failure->i, 1);
    EXPECT_EQ(report.failure->equation, Recurrence::Ratio);
    EXPECT_EQ(report.failure->expected, R(1, 4));
    EXPECT_EQ(report.failure->actual, R(1, 2));
    EXPECT_FALSE(report.matches_pq);
}

TEST(Uniqueness, DiagonalFailureIsReported)
{
    // Ratio row holds, the diagonal does not: p(2,2) should be 1/2 + 1/2*p(2,1).
    ProbTable t(2);
    t.set(1, 1, R(1, 2));
    t.set(2, 2, R(1, 2));
    t.set(2, 1, R(1, 4));
    UniquenessReport report = abelian_uniqueness_check(t, 2);
    ASSERT_FALSE(report.passed());
    EXPECT_EQ(report.failure->equation, Recurrence::Diagonal);
    EXPECT_EQ(report.failure->r, 2);
    EXPECT_EQ(report.failure->i, 2);
}

TEST(Uniqueness, RecurrencesPinDownTheTable)
{
    // Solving the two recurrences row by row from p(1,1) reproduces [i]/[r+1].
    for (Rational q : {R(1, 2), R(2), R(5, 3)}) {
        ProbTable t(5);
        t.set(1, 1, 1 / (1 + q));
        for (int r = 2; r <= 5; ++r) {
            // p(r,r) = 1/(1+q) + q/(1+q) * [r-1]/[r] * p(r,r); solve for p(r,r).
            Rational c = q / (1 + q) * q_integer(r - 1, q) / q_integer(r, q);
            Rational prr = (1 / (1 + q)) / (1 - c);
            t.set(r, r, prr);
            for (int i = 1; i < r; ++i) t.set(r, i, q_integer(i, q) / q_integer(r, q) * prr);
        }
        EXPECT_EQ(t, pq_table(QParam(q), 5));
    }
}

TEST(ProbTable, Bounds)
{
    ProbTable t(2);
    EXPECT_THROW(t.at(3, 1), std::out_of_range);
    EXPECT_THROW(t.set(2, 3, R(1)), std::out_of_range);
    EXPECT_THROW(t.set(1, 1, R(2)), std::domain_error);
    EXPECT_THROW(abelian_uniqueness_check(t, 3), std::out_of_range);
    EXPECT_THROW(probability_table(embed(lbs_procedure()), 2), std::invalid_argument);
}

TEST(ProbTable, TableProcedureReproducesPq)
{
    ProbProcedure p = table_prob_procedure(pq_table(QParam(R(2)), 4));
    for (const auto& w : oracle::all_words(3, 1, 4))
        EXPECT_EQ(measure(p, w), measure(pq_procedure(QParam(R(2))), w));
}

} // namespace
} // namespace parking
