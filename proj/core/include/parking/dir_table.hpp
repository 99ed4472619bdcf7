#pragma once

#include "parking/procedure.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace parking {

// Directions Dir(r, i) for a local memoryless procedure: rows[r-1][i-1] is
// the direction taken by a car preferring the i-th spot of an occupied
// block of size r.
struct DirTable {
    std::vector<std::vector<Direction>> rows;
    Direction default_beyond = Direction::Right;
    // Refuse blocks larger than r_max instead of using default_beyond.
    bool strict = false;

    int r_max() const { return static_cast<int>(rows.size()); }
    Direction at(std::size_t block_size, std::size_t i) const;

    // Throws std::invalid_argument if row r does not have r entries.
    void validate() const;

    bool operator==(const DirTable&) const = default;
};

class TableRangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// {"type":"memoryless_local","r_max":N,"rows":[["R"],["R","L"],...],"default_beyond":"R"}
// An optional boolean "strict" is accepted as well.
DirTable parse_dir_table(std::string_view json_text);
std::string to_json(const DirTable& table);

// Table of an arbitrary memoryless, locally decided procedure read off
// from dir_of on {1..r}.
DirTable tabulate(const Procedure& procedure, int r_max);

} // namespace parking
