#pragma once

#include "parking/procedure.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace parking {

enum class Property { Memoryless, ShiftInvariant, LocallyDecided };

std::string to_string(Property p);

struct PropertyCheck {
    Property property;
    bool declared = false;
    bool holds = true;
    // Two words whose runs contradict the property.
    std::optional<std::pair<Word, Word>> witness;
};

struct FlagReport {
    int r_max = 0;
    std::vector<PropertyCheck> checks;

    const PropertyCheck& get(Property p) const;
    // True when every declared property survived the search.
    bool declared_flags_hold() const;
};

// Exhaustive check of memorylessness, shift invariance and local decision
// over all words of length 1..r_max with letters in {1..r_max+1}. All three
// properties are tested whatever the procedure declares.
//
//  - memoryless: equal (occupied set, letter) pairs always lead to the same spot
//  - shift invariant: P(W shifted by ±1) = P(W) shifted by ±1
//  - locally decided: ls(Wa) = ls(W|I a) with I the block holding a
FlagReport check_flags(const Procedure& procedure, int r_max);

} // namespace parking
