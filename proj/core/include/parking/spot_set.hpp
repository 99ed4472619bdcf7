#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace parking {

using Spot = std::int64_t;

// A maximal run {lo, lo+1, ..., hi} of occupied spots.
struct Block {
    Spot lo = 0;
    Spot hi = 0;

    std::size_t size() const { return static_cast<std::size_t>(hi - lo + 1); }
    bool contains(Spot s) const { return lo <= s && s <= hi; }

    auto operator<=>(const Block&) const = default;
};

// Finite set of occupied spots, kept sorted together with its block
// decomposition.
class SpotSet {
public:
    SpotSet() = default;
    SpotSet(std::initializer_list<Spot> spots);
    explicit SpotSet(std::vector<Spot> spots);

    // {lo, ..., hi}; empty when hi < lo.
    static SpotSet interval(Spot lo, Spot hi);

    bool contains(Spot s) const;
    std::size_t size() const { return spots_.size(); }
    bool empty() const { return spots_.empty(); }

    const std::vector<Spot>& spots() const { return spots_; }
    const std::vector<Block>& blocks() const { return blocks_; }

    // Block containing s, if s is occupied.
    std::optional<Block> block_of(Spot s) const;

    // Inserts a free spot; merges neighbouring blocks.
    void insert(Spot s);

    bool is_interval(Spot lo, Spot hi) const;

    std::string to_string() const;

    auto begin() const { return spots_.begin(); }
    auto end() const { return spots_.end(); }

    bool operator==(const SpotSet& other) const { return spots_ == other.spots_; }
    std::strong_ordering operator<=>(const SpotSet& other) const { return spots_ <=> other.spots_; }

private:
    void rebuild_blocks();

    std::vector<Spot> spots_;
    std::vector<Block> blocks_;
};

std::vector<Block> blocks(const SpotSet& set);

SpotSet shift(const SpotSet& set, std::int64_t k);

} // namespace parking
