#pragma once

#include <cstdint>
#include <span>
#include <string>

namespace parking {

// Exact counter for enumeration results.
__extension__ using Count = unsigned __int128;

std::string to_string(Count value);

// Throws std::invalid_argument on anything but a plain decimal.
Count parse_count(const std::string& text);

Count ipow(Count base, unsigned exponent);
Count factorial(unsigned n);
Count multinomial(std::span<const std::size_t> parts);

// Number of classical parking functions of length r, i.e. (r+1)^(r-1).
Count cayley_count(unsigned r);

} // namespace parking
