#include "parking/colored.hpp"

#include "parking/parallel.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace parking {

Language distinct_letters_language()
{
    return {"distinct-letters",
            [](std::span<const ColoredLetter> word) {
                std::set<ColoredLetter> seen(word.begin(), word.end());
                return seen.size() == word.size();
            },
            true, true};
}

Language all_colored_words_language()
{
    return {"all", [](std::span<const ColoredLetter>) { return true; }, true, true};
}

ColoredProcedure colored_lbs_procedure()
{
    BasicProcedure<ColoredLetter> rule(
        "colored-lbs", {false, true, true},
        [](const State& state, std::span<const ColoredLetter>, const SpotSet&, const Block& b,
           const ColoredLetter& a) {
            auto last = detail::last_parker<ColoredLetter>(state, b.lo);
            if (!last) throw std::logic_error("colored-lbs: block without a recorded last car");
            if (a == *last)
                throw RuleUndefined("colored-lbs: letter " + std::to_string(a.value) + ":" +
                                    std::to_string(a.color) + " equals the last parked letter");
            return a < *last ? Direction::Left : Direction::Right;
        },
        [](State& state, const ColoredLetter& a, Spot parked, const SpotSet& occupied) {
            detail::record_last_parker<ColoredLetter>(state, a, parked, occupied);
        });
    return ColoredProcedure(std::move(rule), distinct_letters_language());
}

ColoredProcedure lift(const Procedure& procedure)
{
    BasicProcedure<ColoredLetter> rule(
        procedure.name(), procedure.flags(),
        [procedure](const State& state, std::span<const ColoredLetter> history, const SpotSet& occupied,
                    const Block& b, const ColoredLetter& a) {
            Word plain = values(history);
            return procedure.decide(state, plain, occupied, b, a.value);
        },
        [procedure](State& state, const ColoredLetter& a, Spot parked, const SpotSet& occupied) {
            procedure.update(state, a.value, parked, occupied);
        },
        procedure.initial_state());
    return ColoredProcedure(std::move(rule));
}

RunResult colored_run(const ColoredProcedure& procedure, std::span<const ColoredLetter> word)
{
    if (procedure.domain() && !procedure.domain()->contains(word))
        throw std::domain_error("word " + format_colored_word(word) + " is outside the language " +
                                procedure.domain()->name);
    return run(procedure.rule(), word);
}

bool is_colored_parking(const ColoredProcedure& procedure, std::span<const ColoredLetter> word)
{
    return colored_run(procedure, word).occupied.is_interval(1, static_cast<Spot>(word.size()));
}

Word values(std::span<const ColoredLetter> word)
{
    Word out;
    out.reserve(word.size());
    for (const auto& a : word) out.push_back(a.value);
    return out;
}

ColoredWord shift(std::span<const ColoredLetter> word, std::int64_t k)
{
    ColoredWord out(word.begin(), word.end());
    for (auto& a : out) a.value += k;
    return out;
}

ColoredWord rotate(std::span<const ColoredLetter> word, int r)
{
    Word rotated = rotate(values(word), r);
    ColoredWord out(word.begin(), word.end());
    for (std::size_t i = 0; i < out.size(); ++i) out[i].value = rotated[i];
    return out;
}

std::string format_colored_word(std::span<const ColoredLetter> word)
{
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(word[i].value) + ":" + std::to_string(word[i].color);
    }
    return out;
}

ColoredWord parse_colored_word(std::string_view text)
{
    ColoredWord word;
    if (text.empty()) return word;
    auto number = [&](std::string_view token) {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
            throw std::invalid_argument("bad colored letter in '" + std::string(text) + "'");
        return v;
    };
    std::size_t start = 0;
    while (true) {
        std::size_t end = text.find(',', start);
        std::string_view token = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        auto colon = token.find(':');
        if (colon == std::string_view::npos)
            throw std::invalid_argument("colored letters are written value:color");
        word.push_back({number(token.substr(0, colon)), number(token.substr(colon + 1))});
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return word;
}

ColoredOrbitReport colored_orbit_audit(const ColoredProcedure& procedure, const Language& language, int r,
                                       std::span<const Color> colors, const EnumerationOptions& options)
{
    if (r < 1) throw std::domain_error("colored audit needs r >= 1");
    if (r > options.cap) throw CapExceeded("r = " + std::to_string(r) + " exceeds the exhaustive cap");
    if (colors.empty()) throw std::invalid_argument("color window is empty");

    const auto c = static_cast<Letter>(colors.size());
    const Letter alphabet = static_cast<Letter>(r + 1) * c;
    auto letter = [&](Letter index) {
        return ColoredLetter{1 + index / c, colors[static_cast<std::size_t>(index % c)]};
    };

    struct Partial {
        std::map<Count, Count> histogram;
        std::vector<OrbitViolation<ColoredWord>> violations;
        Count orbits = 0;
    };

    // Representatives have first value 1; one task per first color.
    auto partial = map_tasks<Partial>(colors.size(), options.jobs, [&](std::size_t first) {
        Partial out;
        ColoredWord word(static_cast<std::size_t>(r));
        for_each_word(
            static_cast<std::size_t>(r), 0, alphabet - 1,
            [&](const Word& index) {
                for (std::size_t k = 0; k < word.size(); ++k) word[k] = letter(index[k]);
                if (!language.contains(word)) return;

                for (std::size_t k = 0; k < word.size(); ++k) {
                    ColoredWord shorter = word;
                    shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(k));
                    if (!language.contains(shorter))
                        throw PreconditionFailure("language " + language.name + " is not closed under subwords",
                                                  word, shorter);
                }

                std::vector<ColoredWord> members;
                Count parking = 0;
                ColoredWord current = word;
                for (int k = 0; k <= r; ++k) {
                    if (k > 0 && !language.contains(current))
                        throw PreconditionFailure("language " + language.name + " is not closed under rotation",
                                                  word, current);
                    if (is_colored_parking(procedure, current)) ++parking;
                    members.push_back(current);
                    current = rotate(current, r);
                }
                ++out.orbits;
                ++out.histogram[parking];
                if (parking != 1) {
                    std::sort(members.begin(), members.end());
                    out.violations.push_back({std::move(members), parking});
                }
            },
            Word{static_cast<Letter>(first)});
        return out;
    });

    ColoredOrbitReport report;
    report.r = r;
    for (auto& part : partial) {
        report.orbit_count += part.orbits;
        for (const auto& [k, v] : part.histogram) report.histogram[k] += v;
        for (auto& violation : part.violations) report.violations.push_back(std::move(violation));
    }
    return report;
}

} // namespace parking
