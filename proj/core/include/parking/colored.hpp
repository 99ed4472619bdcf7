#pragma once

#include "parking/detail/last_parker.hpp"
#include "parking/enumeration.hpp"
#include "parking/procedure.hpp"

#include <compare>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace parking {

using Color = std::int64_t;

// Letter of Z x C, ordered lexicographically by (value, color).
struct ColoredLetter {
    Letter value = 0;
    Color color = 0;

    auto operator<=>(const ColoredLetter&) const = default;
};

inline Spot value_of(const ColoredLetter& a) { return a.value; }

using ColoredWord = std::vector<ColoredLetter>;

namespace detail {

template <>
struct LetterCodec<ColoredLetter> {
    static constexpr std::size_t width = 2;
    static void put(std::vector<std::int64_t>& out, const ColoredLetter& a)
    {
        out.push_back(a.value);
        out.push_back(a.color);
    }
    static ColoredLetter get(const std::int64_t* in) { return {in[0], in[1]}; }
};

} // namespace detail

struct Language {
    std::string name;
    std::function<bool(std::span<const ColoredLetter>)> contains;
    bool subword_closed = false;
    bool rotation_closed = false;
};

// Words whose letters are pairwise distinct as (value, color) pairs.
Language distinct_letters_language();
Language all_colored_words_language();

// Rule on colored letters with an optional domain language.
class ColoredProcedure {
public:
    explicit ColoredProcedure(BasicProcedure<ColoredLetter> rule, std::optional<Language> domain = std::nullopt)
        : rule_(std::move(rule)), domain_(std::move(domain))
    {}

    const BasicProcedure<ColoredLetter>& rule() const { return rule_; }
    const std::optional<Language>& domain() const { return domain_; }
    const std::string& name() const { return rule_.name(); }
    const ProcedureFlags& flags() const { return rule_.flags(); }

private:
    BasicProcedure<ColoredLetter> rule_;
    std::optional<Language> domain_;
};

// Raised when a rule meets a configuration it does not define, e.g. colored
// LBS comparing two equal letters.
class RuleUndefined : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Colored LBS on the distinct-letters language: compare the whole colored
// letter with the last car parked on the block; smaller goes left, larger right.
ColoredProcedure colored_lbs_procedure();

// The plain procedure acting on values, colors ignored.
ColoredProcedure lift(const Procedure& procedure);

// Throws std::domain_error if the word is outside the procedure's language.
RunResult colored_run(const ColoredProcedure& procedure, std::span<const ColoredLetter> word);

bool is_colored_parking(const ColoredProcedure& procedure, std::span<const ColoredLetter> word);

Word values(std::span<const ColoredLetter> word);

// Shift and rotation act on values only.
ColoredWord shift(std::span<const ColoredLetter> word, std::int64_t k);
ColoredWord rotate(std::span<const ColoredLetter> word, int r);

// "value:color" tokens, comma separated.
std::string format_colored_word(std::span<const ColoredLetter> word);
ColoredWord parse_colored_word(std::string_view text);

class PreconditionFailure : public std::runtime_error {
public:
    PreconditionFailure(const std::string& what, ColoredWord in_language, ColoredWord outside)
        : std::runtime_error(what), in_language_(std::move(in_language)), outside_(std::move(outside))
    {}

    const ColoredWord& in_language() const { return in_language_; }
    const ColoredWord& outside() const { return outside_; }

private:
    ColoredWord in_language_;
    ColoredWord outside_;
};

using ColoredOrbitReport = BasicOrbitReport<ColoredWord>;

// Every word of L of length r with values in {1..r+1} and colors from
// `colors`, grouped in classes under value rotation; parking words counted
// per class. Closure of L under rotation and single-letter deletion is
// checked on the way; a violation raises PreconditionFailure.
ColoredOrbitReport colored_orbit_audit(const ColoredProcedure& procedure, const Language& language, int r,
                                       std::span<const Color> colors, const EnumerationOptions& options = {});

} // namespace parking
