#pragma once

#include "parking/builtins.hpp"
#include "parking/procedure.hpp"
#include "parking/rational.hpp"

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace parking {

// Bilateral procedure whose decision is the exact probability of going right.
class ProbProcedure {
public:
    using DecideFn = std::function<Rational(const State&, std::span<const Letter> history,
                                            const SpotSet& occupied, const Block& block,
                                            Letter letter)>;
    using UpdateFn = Procedure::UpdateFn;

    ProbProcedure(std::string name, ProcedureFlags flags, DecideFn decide, UpdateFn update = {},
                  State initial = {})
        : name_(std::move(name)), flags_(flags), decide_(std::move(decide)),
          update_(std::move(update)), initial_(std::move(initial))
    {}

    const std::string& name() const { return name_; }
    const ProcedureFlags& flags() const { return flags_; }
    const State& initial_state() const { return initial_; }

    // Probability of parking right of the block; throws std::logic_error if
    // the rule returns something outside [0, 1].
    Rational decide(const State& state, std::span<const Letter> history, const SpotSet& occupied,
                    const Block& block, Letter letter) const;

    void update(State& state, Letter letter, Spot parked, const SpotSet& occupied) const
    {
        if (update_) update_(state, letter, parked, occupied);
    }

private:
    std::string name_;
    ProcedureFlags flags_;
    DecideFn decide_;
    UpdateFn update_;
    State initial_;
};

// Right with probability q whatever the configuration.
ProbProcedure kw_procedure(const Rational& q);

// Car i goes right with probability q_i; cars past the list reuse the last
// entry. Depends only on the arrival index, so it is not locally decided
// but still has one unit of parking mass per cyclic orbit.
ProbProcedure kw_sequence_procedure(std::vector<Rational> q_by_car);

// p(r, i) = [i]/[r+1]: the right-probability of a car preferring the i-th
// spot of a block of size r.
ProbProcedure pq_procedure(const QParam& q);

// Deterministic procedure with 0/1 probabilities.
ProbProcedure embed(const Procedure& procedure);

// kw:q=..., kwseq:q=a+b+..., pq:q=... (q may be "inf"); any other name is
// looked up in the deterministic catalog and embedded.
ProbProcedure prob_builtin(const ProcSpec& spec);

class Measure {
public:
    Measure() = default;
    explicit Measure(std::map<SpotSet, Rational> weights);

    const std::map<SpotSet, Rational>& support() const { return weights_; }
    Rational at(const SpotSet& set) const;
    Rational total() const;

    bool operator==(const Measure&) const = default;

private:
    std::map<SpotSet, Rational> weights_;
};

// Exact distribution of the occupied set after the cars of `word` park.
// Branches are expanded depth-first by letter and merged on
// (occupied set, procedure state).
Measure measure(const ProbProcedure& procedure, std::span<const Letter> word);

// Probability that the run occupies exactly {1..|word|}.
Rational parking_probability(const ProbProcedure& procedure, std::span<const Letter> word);

struct ProbOptions {
    int cap = 5;
    unsigned jobs = 0;
};

// Sum of parking probabilities over {1..r+1}^r.
Rational total_parking_mass(const ProbProcedure& procedure, int r, const ProbOptions& options = {});

// Parking mass of every cyclic orbit, keyed by its representative starting with 1.
std::vector<std::pair<Word, Rational>> orbit_masses(const ProbProcedure& procedure, int r,
                                                    const ProbOptions& options = {});

struct AbelianReport {
    bool abelian = true;
    // A word and a reordering of it with different measures.
    std::optional<std::pair<Word, Word>> witness;
};

// Compares every word of length 1..r_max over {1..length+1} with its sorted
// rearrangement.
AbelianReport is_abelian(const ProbProcedure& procedure, int r_max, const ProbOptions& options = {});

// p(r, i) for 1 <= i <= r <= r_max.
class ProbTable {
public:
    ProbTable() = default;
    explicit ProbTable(int r_max);

    int r_max() const { return r_max_; }
    const Rational& at(int r, int i) const;
    void set(int r, int i, Rational p);

    bool operator==(const ProbTable&) const = default;

private:
    int r_max_ = 0;
    std::vector<std::vector<Rational>> rows_;
};

// Right-probabilities on the blocks {1..r}. Memoryless procedures only.
ProbTable probability_table(const ProbProcedure& procedure, int r_max);
ProbTable pq_table(const QParam& q, int r_max);
ProbProcedure table_prob_procedure(ProbTable table, std::string name = "ptable");

enum class Recurrence {
    Ratio,    // p(r,i) = [i]/[r] p(r,r) for i < r
    Diagonal, // p(r,r) = 1/(1+q) + q/(1+q) p(r,r-1)
};

std::string to_string(Recurrence eq);

struct RecurrenceFailure {
    int r = 0;
    int i = 0;
    Recurrence equation = Recurrence::Ratio;
    Rational expected;
    Rational actual;
};

struct UniquenessReport {
    QParam q;
    std::optional<RecurrenceFailure> failure;
    // Direct comparison of the table with [i]/[r+1].
    bool matches_pq = false;

    bool passed() const { return !failure.has_value(); }
};

// Derives q from p(1,1) = 1/(1+q) (p(1,1) = 0 means q = inf) and checks the
// two recurrences an abelian local memoryless procedure must satisfy, for
// 2 <= r <= r_max. Rows are scanned in order, Ratio before Diagonal.
UniquenessReport abelian_uniqueness_check(const ProbTable& table, int r_max);

} // namespace parking
