#include "parking/word.hpp"

#include <charconv>
#include <stdexcept>

namespace parking {

Word shift(std::span<const Letter> word, std::int64_t k)
{
    Word out(word.begin(), word.end());
    for (Letter& a : out) a += k;
    return out;
}

Word rotate(std::span<const Letter> word, int r)
{
    Word out(word.begin(), word.end());
    for (Letter& a : out) {
        if (a < 1 || a > r + 1)
            throw std::domain_error("letter " + std::to_string(a) + " outside {1.." +
                                    std::to_string(r + 1) + "}");
        a = a == r + 1 ? 1 : a + 1;
    }
    return out;
}

CyclicOrbit cyclic_orbit(std::span<const Letter> word, int r)
{
    CyclicOrbit orbit;
    orbit.representative.assign(word.begin(), word.end());
    orbit.modulus = r + 1;
    Word current = orbit.representative;
    for (int k = 0; k <= r; ++k) {
        current = rotate(current, r);
        orbit.members.insert(current);
    }
    return orbit;
}

Count shuffle_count(std::span<const Word> parts)
{
    std::vector<std::size_t> sizes;
    for (const Word& part : parts) sizes.push_back(part.size());
    return multinomial(sizes);
}

namespace {

void shuffle_rec(std::span<const Word> parts, std::vector<std::size_t>& taken, Word& current,
                 std::size_t total, const std::function<void(const Word&)>& visit)
{
    if (current.size() == total) {
        visit(current);
        return;
    }
    for (std::size_t j = 0; j < parts.size(); ++j) {
        if (taken[j] == parts[j].size()) continue;
        current.push_back(parts[j][taken[j]++]);
        shuffle_rec(parts, taken, current, total, visit);
        --taken[j];
        current.pop_back();
    }
}

} // namespace

void for_each_shuffle(std::span<const Word> parts, const std::function<void(const Word&)>& visit)
{
    std::size_t total = 0;
    for (const Word& part : parts) total += part.size();
    std::vector<std::size_t> taken(parts.size(), 0);
    Word current;
    current.reserve(total);
    shuffle_rec(parts, taken, current, total, visit);
}

std::vector<Word> shuffles(std::span<const Word> parts)
{
    std::vector<Word> out;
    for_each_shuffle(parts, [&](const Word& w) { out.push_back(w); });
    return out;
}

std::string format_word(std::span<const Letter> word)
{
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(word[i]);
    }
    return out;
}

std::string format_compact(std::span<const Letter> word)
{
    std::string out;
    for (Letter a : word) out += std::to_string(a);
    return out;
}

Word parse_word(std::string_view text)
{
    Word word;
    if (text.empty()) return word;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view token = text.substr(start, end - start);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        Letter value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
            throw std::invalid_argument("bad letter '" + std::string(token) + "' in word");
        word.push_back(value);
        start = end + 1;
    }
    return word;
}

} // namespace parking
