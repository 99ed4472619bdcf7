#pragma once

#include "parking/count.hpp"

#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace parking {

using Letter = std::int64_t;

// Preference word: letter i is the spot car i+1 would like to park in.
using Word = std::vector<Letter>;

Word shift(std::span<const Letter> word, std::int64_t k);

// Adds one to every letter modulo r+1, with representatives {1..r+1}.
// Throws std::domain_error if a letter lies outside {1..r+1}.
Word rotate(std::span<const Letter> word, int r);

struct CyclicOrbit {
    Word representative;
    int modulus = 0;
    std::set<Word> members;
};

CyclicOrbit cyclic_orbit(std::span<const Letter> word, int r);

// Number of interleavings of the parts that keep each part in order.
Count shuffle_count(std::span<const Word> parts);

void for_each_shuffle(std::span<const Word> parts, const std::function<void(const Word&)>& visit);

std::vector<Word> shuffles(std::span<const Word> parts);

// Comma separated integers, e.g. "1,2,1". Concatenated digits are written
// without separators only by format_compact().
std::string format_word(std::span<const Letter> word);
std::string format_compact(std::span<const Letter> word);
Word parse_word(std::string_view text);

// Calls visit(word) for every word of the given length over {lo..hi}, in
// lexicographic order. `prefix` fixes the first letters.
template <class Visit>
void for_each_word(std::size_t length, Letter lo, Letter hi, Visit&& visit, Word prefix = {})
{
    if (prefix.size() > length || hi < lo) return;
    Word word = std::move(prefix);
    std::size_t fixed = word.size();
    word.resize(length, lo);
    while (true) {
        visit(std::as_const(word));
        std::size_t i = length;
        while (true) {
            if (i == fixed) return;
            --i;
            if (word[i] < hi) {
                ++word[i];
                break;
            }
            word[i] = lo;
        }
    }
}

} // namespace parking
