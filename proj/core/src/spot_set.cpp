#include "parking/spot_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace parking {

SpotSet::SpotSet(std::initializer_list<Spot> spots)
    : SpotSet(std::vector<Spot>(spots))
{}

SpotSet::SpotSet(std::vector<Spot> spots)
    : spots_(std::move(spots))
{
    std::sort(spots_.begin(), spots_.end());
    spots_.erase(std::unique(spots_.begin(), spots_.end()), spots_.end());
    rebuild_blocks();
}

SpotSet SpotSet::interval(Spot lo, Spot hi)
{
    SpotSet set;
    for (Spot s = lo; s <= hi; ++s) set.spots_.push_back(s);
    if (lo <= hi) set.blocks_.push_back({lo, hi});
    return set;
}

bool SpotSet::contains(Spot s) const
{
    return std::binary_search(spots_.begin(), spots_.end(), s);
}

std::optional<Block> SpotSet::block_of(Spot s) const
{
    auto it = std::lower_bound(blocks_.begin(), blocks_.end(), s,
                               [](const Block& b, Spot x) { return b.hi < x; });
    if (it != blocks_.end() && it->contains(s)) return *it;
    return std::nullopt;
}

void SpotSet::insert(Spot s)
{
    auto pos = std::lower_bound(spots_.begin(), spots_.end(), s);
    if (pos != spots_.end() && *pos == s)
        throw std::logic_error("spot " + std::to_string(s) + " already occupied");
    spots_.insert(pos, s);

    // First block lying strictly to the right of s (blocks never contain s).
    auto right = std::lower_bound(blocks_.begin(), blocks_.end(), s,
                                  [](const Block& b, Spot x) { return b.hi < x; });
    bool joins_left = right != blocks_.begin() && std::prev(right)->hi == s - 1;
    bool joins_right = right != blocks_.end() && right->lo == s + 1;

    if (joins_left && joins_right) {
        std::prev(right)->hi = right->hi;
        blocks_.erase(right);
    } else if (joins_left) {
        std::prev(right)->hi = s;
    } else if (joins_right) {
        right->lo = s;
    } else {
        blocks_.insert(right, Block{s, s});
    }
}

bool SpotSet::is_interval(Spot lo, Spot hi) const
{
    if (hi < lo) return spots_.empty();
    return blocks_.size() == 1 && blocks_.front() == Block{lo, hi};
}

std::string SpotSet::to_string() const
{
    std::string out = "{";
    for (std::size_t i = 0; i < spots_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(spots_[i]);
    }
    return out + "}";
}

void SpotSet::rebuild_blocks()
{
    blocks_.clear();
    for (Spot s : spots_) {
        if (!blocks_.empty() && blocks_.back().hi == s - 1)
            blocks_.back().hi = s;
        else
            blocks_.push_back({s, s});
    }
}

std::vector<Block> blocks(const SpotSet& set)
{
    return set.blocks();
}

SpotSet shift(const SpotSet& set, std::int64_t k)
{
    std::vector<Spot> moved;
    moved.reserve(set.size());
    for (Spot s : set) moved.push_back(s + k);
    return SpotSet(std::move(moved));
}

} // namespace parking
