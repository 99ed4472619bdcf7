#pragma once

#include "parking/procedure.hpp"

#include <optional>

namespace parking::detail {

// How a letter is flattened into State::data.
template <class L>
struct LetterCodec;

template <>
struct LetterCodec<Letter> {
    static constexpr std::size_t width = 1;
    static void put(std::vector<std::int64_t>& out, const Letter& a) { out.push_back(a); }
    static Letter get(const std::int64_t* in) { return in[0]; }
};

// State layout: for each block, sorted by lower end, the entries
// [lo, code(letter of the last car parked in the block)].
template <class L>
std::optional<L> last_parker(const State& state, Spot block_lo)
{
    constexpr std::size_t stride = 1 + LetterCodec<L>::width;
    for (std::size_t k = 0; k + stride <= state.data.size(); k += stride) {
        if (state.data[k] == block_lo) return LetterCodec<L>::get(&state.data[k + 1]);
    }
    return std::nullopt;
}

// The car that just parked becomes the last parker of its (possibly merged)
// block; records of the blocks it absorbed are dropped.
template <class L>
void record_last_parker(State& state, const L& letter, Spot parked, const SpotSet& occupied)
{
    constexpr std::size_t stride = 1 + LetterCodec<L>::width;
    Block merged = *occupied.block_of(parked);
    std::vector<std::int64_t> next;
    next.reserve(state.data.size() + stride);
    bool placed = false;
    auto place = [&] {
        next.push_back(merged.lo);
        LetterCodec<L>::put(next, letter);
        placed = true;
    };
    for (std::size_t k = 0; k + stride <= state.data.size(); k += stride) {
        Spot lo = state.data[k];
        if (merged.contains(lo)) continue;
        if (!placed && lo > merged.hi) place();
        next.insert(next.end(), state.data.begin() + static_cast<std::ptrdiff_t>(k),
                    state.data.begin() + static_cast<std::ptrdiff_t>(k + stride));
    }
    if (!placed) place();
    state.data = std::move(next);
}

} // namespace parking::detail
