#include "parking/procedure.hpp"

#include <algorithm>

namespace parking {

char to_char(Direction d)
{
    return d == Direction::Left ? 'L' : 'R';
}

Direction direction_from_char(char c)
{
    switch (c) {
    case 'L': case 'l': return Direction::Left;
    case 'R': case 'r': return Direction::Right;
    default: throw std::invalid_argument(std::string("bad direction '") + c + "'");
    }
}

std::optional<std::size_t> Outcome::arrival_at(Spot spot) const
{
    auto it = std::find(spot_of_car_.begin(), spot_of_car_.end(), spot);
    if (it == spot_of_car_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - spot_of_car_.begin()) + 1;
}

std::map<Spot, std::size_t> Outcome::as_map() const
{
    std::map<Spot, std::size_t> out;
    for (std::size_t i = 0; i < spot_of_car_.size(); ++i) out.emplace(spot_of_car_[i], i + 1);
    return out;
}

std::vector<std::size_t> Outcome::arrivals_by_spot() const
{
    std::vector<std::size_t> out;
    for (const auto& [spot, car] : as_map()) out.push_back(car);
    return out;
}

Direction dir_of_set(const Procedure& procedure, const SpotSet& occupied, Letter a)
{
    if (!procedure.flags().memoryless)
        throw std::invalid_argument(procedure.name() + " is not memoryless");
    auto block = occupied.block_of(a);
    if (!block) throw std::domain_error("preferred spot is not occupied");
    return procedure.decide(procedure.initial_state(), {}, occupied, *block, a);
}

Direction dir_of(const Procedure& procedure, int r, Letter i)
{
    if (!procedure.flags().memoryless || !procedure.flags().locally_decided)
        throw std::invalid_argument(procedure.name() + " is not memoryless and locally decided");
    if (i < 1 || i > r) throw std::domain_error("dir_of needs 1 <= i <= r");
    return dir_of_set(procedure, SpotSet::interval(1, r), i);
}

} // namespace parking
