#pragma once

#include "parking/spot_set.hpp"
#include "parking/word.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace parking {

enum class Direction { Left, Right };

char to_char(Direction d);
Direction direction_from_char(char c);

struct ProcedureFlags {
    bool memoryless = false;
    bool shift_invariant = false;
    bool locally_decided = false;

    bool local() const { return shift_invariant && locally_decided; }
};

// Procedure-owned state. Procedures encode whatever they need to remember
// as a flat list of integers; the engine only copies and compares it.
struct State {
    std::vector<std::int64_t> data;

    auto operator<=>(const State&) const = default;
};

// Spot a letter asks for. Plain letters are spots; richer alphabets
// specialise this.
inline Spot value_of(Letter a) { return a; }

// Deterministic bilateral parking rule over the alphabet L.
//
// decide() is consulted only when the requested spot is occupied; `block`
// is then the block of `occupied` containing it. update() runs after every
// car has parked, with the occupied set already including the new spot.
template <class L>
class BasicProcedure {
public:
    using letter_type = L;
    using DecideFn = std::function<Direction(const State&, std::span<const L> history,
                                             const SpotSet& occupied, const Block& block,
                                             const L& letter)>;
    using UpdateFn = std::function<void(State&, const L& letter, Spot parked,
                                        const SpotSet& occupied)>;

    BasicProcedure(std::string name, ProcedureFlags flags, DecideFn decide,
                   UpdateFn update = {}, State initial = {})
        : name_(std::move(name)), flags_(flags), decide_(std::move(decide)),
          update_(std::move(update)), initial_(std::move(initial))
    {}

    const std::string& name() const { return name_; }
    const ProcedureFlags& flags() const { return flags_; }
    const State& initial_state() const { return initial_; }

    Direction decide(const State& state, std::span<const L> history, const SpotSet& occupied,
                     const Block& block, const L& letter) const
    {
        return decide_(state, history, occupied, block, letter);
    }

    void update(State& state, const L& letter, Spot parked, const SpotSet& occupied) const
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

using Procedure = BasicProcedure<Letter>;

// Arrival order: car i (1-based) parked at spot_of_car[i-1].
class Outcome {
public:
    Outcome() = default;
    explicit Outcome(std::vector<Spot> spot_of_car) : spot_of_car_(std::move(spot_of_car)) {}

    std::size_t size() const { return spot_of_car_.size(); }
    const std::vector<Spot>& spot_of_car() const { return spot_of_car_; }

    // 1-based index of the car parked at `spot`.
    std::optional<std::size_t> arrival_at(Spot spot) const;

    // spot -> arrival index
    std::map<Spot, std::size_t> as_map() const;

    // Arrival indices listed in increasing spot order. For a parking word
    // this is the outcome permutation in one-line notation.
    std::vector<std::size_t> arrivals_by_spot() const;

    bool operator==(const Outcome&) const = default;

private:
    std::vector<Spot> spot_of_car_;
};

struct RunResult {
    SpotSet occupied;
    Outcome outcome;
};

// Incremental driver: feed letters one at a time.
template <class L>
class Runner {
public:
    explicit Runner(const BasicProcedure<L>& procedure)
        : procedure_(&procedure), state_(procedure.initial_state())
    {}

    Spot feed(const L& letter)
    {
        Spot want = value_of(letter);
        Spot parked = want;
        if (auto block = occupied_.block_of(want)) {
            Direction d = procedure_->decide(state_, history_, occupied_, *block, letter);
            parked = d == Direction::Left ? block->lo - 1 : block->hi + 1;
        }
        occupied_.insert(parked);
        history_.push_back(letter);
        parked_.push_back(parked);
        procedure_->update(state_, letter, parked, occupied_);
        return parked;
    }

    const SpotSet& occupied() const { return occupied_; }
    const std::vector<L>& history() const { return history_; }
    Outcome outcome() const { return Outcome(parked_); }

private:
    const BasicProcedure<L>* procedure_;
    State state_;
    SpotSet occupied_;
    std::vector<L> history_;
    std::vector<Spot> parked_;
};

template <class L>
RunResult run(const BasicProcedure<L>& procedure, std::span<const L> word)
{
    Runner<L> runner(procedure);
    for (const L& a : word) runner.feed(a);
    return {runner.occupied(), runner.outcome()};
}

template <class L>
Spot last_spot(const BasicProcedure<L>& procedure, std::span<const L> word)
{
    if (word.empty()) throw std::domain_error("last_spot of the empty word");
    Runner<L> runner(procedure);
    Spot parked = 0;
    for (const L& a : word) parked = runner.feed(a);
    return parked;
}

template <class L>
bool is_parking(const BasicProcedure<L>& procedure, std::span<const L> word)
{
    return run(procedure, word).occupied.is_interval(1, static_cast<Spot>(word.size()));
}

template <class L>
Outcome outcome(const BasicProcedure<L>& procedure, std::span<const L> word)
{
    return run(procedure, word).outcome;
}

// Direction taken by a car preferring i when {1..r} is occupied.
// Throws std::invalid_argument unless the procedure is memoryless and
// locally decided.
Direction dir_of(const Procedure& procedure, int r, Letter i);

// Direction taken by a car preferring a ∈ occupied. Memoryless procedures only.
Direction dir_of_set(const Procedure& procedure, const SpotSet& occupied, Letter a);

} // namespace parking
