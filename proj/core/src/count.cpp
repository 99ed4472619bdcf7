#include "parking/count.hpp"

#include <algorithm>
#include <stdexcept>

namespace parking {

std::string to_string(Count value)
{
    if (value == 0) return "0";
    std::string digits;
    while (value != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
        value /= 10;
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

Count parse_count(const std::string& text)
{
    if (text.empty()) throw std::invalid_argument("empty count");
    Count value = 0;
    for (char c : text) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad count: " + text);
        value = value * 10 + static_cast<Count>(c - '0');
    }
    return value;
}

Count ipow(Count base, unsigned exponent)
{
    Count result = 1;
    while (exponent-- > 0) result *= base;
    return result;
}

Count factorial(unsigned n)
{
    Count result = 1;
    for (unsigned k = 2; k <= n; ++k) result *= k;
    return result;
}

Count multinomial(std::span<const std::size_t> parts)
{
    Count result = 1;
    std::size_t total = 0;
    for (std::size_t part : parts) {
        for (std::size_t k = 1; k <= part; ++k) {
            ++total;
            result = result * total / k;
        }
    }
    return result;
}

Count cayley_count(unsigned r)
{
    if (r == 0) return 1;
    return ipow(r + 1, r - 1);
}

} // namespace parking
