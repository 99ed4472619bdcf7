#include "parking/flags.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace parking {

std::string to_string(Property p)
{
    switch (p) {
    case Property::Memoryless: return "memoryless";
    case Property::ShiftInvariant: return "shift_invariant";
    case Property::LocallyDecided: return "locally_decided";
    }
    return "?";
}

const PropertyCheck& FlagReport::get(Property p) const
{
    for (const auto& check : checks)
        if (check.property == p) return check;
    throw std::out_of_range("property not checked");
}

bool FlagReport::declared_flags_hold() const
{
    return std::all_of(checks.begin(), checks.end(),
                       [](const PropertyCheck& c) { return !c.declared || c.holds; });
}

FlagReport check_flags(const Procedure& procedure, int r_max)
{
    if (r_max < 1) throw std::domain_error("check_flags needs r_max >= 1");
    const auto& flags = procedure.flags();
    PropertyCheck memoryless{Property::Memoryless, flags.memoryless, true, std::nullopt};
    PropertyCheck shift_inv{Property::ShiftInvariant, flags.shift_invariant, true, std::nullopt};
    PropertyCheck local{Property::LocallyDecided, flags.locally_decided, true, std::nullopt};

    std::map<std::pair<SpotSet, Letter>, std::pair<Spot, Word>> seen;

    for (int length = 1; length <= r_max; ++length) {
        for_each_word(static_cast<std::size_t>(length), 1, r_max + 1, [&](const Word& word) {
            RunResult full = run<Letter>(procedure, word);

            if (shift_inv.holds) {
                for (std::int64_t k : {1, -1}) {
                    Word moved = shift(word, k);
                    if (run<Letter>(procedure, moved).occupied != shift(full.occupied, k)) {
                        shift_inv.holds = false;
                        shift_inv.witness = {word, moved};
                        break;
                    }
                }
            }

            std::span<const Letter> prefix(word.data(), word.size() - 1);
            Letter a = word.back();
            RunResult before = run(procedure, prefix);
            auto block = before.occupied.block_of(a);
            if (!block) return;
            Spot parked = full.outcome.spot_of_car().back();

            if (memoryless.holds) {
                auto [it, inserted] = seen.try_emplace({before.occupied, a}, parked, word);
                if (!inserted && it->second.first != parked) {
                    memoryless.holds = false;
                    memoryless.witness = {it->second.second, word};
                }
            }

            if (local.holds) {
                Word restricted;
                const auto& spots = before.outcome.spot_of_car();
                for (std::size_t i = 0; i < prefix.size(); ++i)
                    if (block->contains(spots[i])) restricted.push_back(prefix[i]);
                restricted.push_back(a);
                if (last_spot<Letter>(procedure, restricted) != parked) {
                    local.holds = false;
                    local.witness = {word, restricted};
                }
            }
        });
    }
    return FlagReport{r_max, {memoryless, shift_inv, local}};
}

} // namespace parking
