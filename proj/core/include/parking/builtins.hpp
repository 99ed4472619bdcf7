#pragma once

#include "parking/dir_table.hpp"
#include "parking/procedure.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace parking {

Procedure right_procedure();
Procedure left_procedure();

// Nearest free spot on the right if it is weakly closer, else the left one.
Procedure closest_procedure();

// Right iff the block holding the preferred spot has prime size.
Procedure prime_procedure();

// Right for even preferences, left for odd ones. Not shift invariant.
Procedure evenodd_procedure();

// k-Naples: back up at most k spots, never below spot 1.
Procedure naples_procedure(int k);

enum class FarConvention {
    Prose,  // right iff R <= L
    Formal, // left iff L >= R
};

// R and L count all parked cars right/left of the preferred spot, so the
// rule looks outside the block. Shift invariant, not locally decided.
Procedure far_procedure(FarConvention convention = FarConvention::Prose);

// "Last block standing": compare with the preference of the last car that
// parked on the block; smaller goes left, otherwise right.
Procedure lbs_procedure();

Procedure table_procedure(DirTable table, std::string name = "table");

// Direction depends only on the car's arrival index (1-based); cars past
// the end of `by_car` use `beyond`.
Procedure indexed_procedure(std::vector<Direction> by_car, Direction beyond = Direction::Right);

using Params = std::map<std::string, std::string>;

struct ProcSpec {
    std::string name;
    Params params;
};

// "naples:k=2", "far:convention=formal", "kw:q=1/2", ...
// Throws std::invalid_argument on malformed input.
ProcSpec parse_proc_spec(std::string_view text);
std::string format_proc_spec(const ProcSpec& spec);

// Deterministic catalog: right, left, closest, prime, evenodd, naples(k),
// far(convention), lbs, indexed(seq, beyond). Tables come from DirTable.
// Throws std::invalid_argument for unknown names or bad parameters.
Procedure builtin(std::string_view name, const Params& params = {});
Procedure builtin(const ProcSpec& spec);

std::vector<std::string> builtin_names();

} // namespace parking
