#include "parking/builtins.hpp"

#include "parking/detail/last_parker.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>

namespace parking {

namespace {

constexpr ProcedureFlags kLocalMemoryless{true, true, true};

bool is_prime(std::size_t n)
{
    if (n < 2) return false;
    for (std::size_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void require_only(const Params& params, std::initializer_list<std::string_view> allowed,
                  std::string_view name)
{
    for (const auto& [key, value] : params) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw std::invalid_argument("unknown parameter '" + key + "' for " + std::string(name));
    }
}

int parse_int(const std::string& text, std::string_view what)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
        throw std::invalid_argument("bad integer '" + text + "' for " + std::string(what));
    return value;
}

} // namespace

Procedure right_procedure()
{
    return Procedure("right", kLocalMemoryless,
                     [](const State&, std::span<const Letter>, const SpotSet&, const Block&,
                        const Letter&) { return Direction::Right; });
}

Procedure left_procedure()
{
    return Procedure("left", kLocalMemoryless,
                     [](const State&, std::span<const Letter>, const SpotSet&, const Block&,
                        const Letter&) { return Direction::Left; });
}

Procedure closest_procedure()
{
    return Procedure("closest", kLocalMemoryless,
                     [](const State&, std::span<const Letter>, const SpotSet&, const Block& b,
                        const Letter& a) {
                         Spot left_gap = a - (b.lo - 1);
                         Spot right_gap = (b.hi + 1) - a;
                         return right_gap <= left_gap ? Direction::Right : Direction::Left;
                     });
}

Procedure prime_procedure()
{
    return Procedure("prime", kLocalMemoryless,
                     [](const State&, std::span<const Letter>, const SpotSet&, const Block& b,
                        const Letter&) {
                         return is_prime(b.size()) ? Direction::Right : Direction::Left;
                     });
}

Procedure evenodd_procedure()
{
    return Procedure("evenodd", {true, false, true},
                     [](const State&, std::span<const Letter>, const SpotSet&, const Block&,
                        const Letter& a) {
                         return a % 2 == 0 ? Direction::Right : Direction::Left;
                     });
}

Procedure naples_procedure(int k)
{
    if (k < 1) throw std::invalid_argument("naples needs k >= 1");
    // Scanning a-1, ..., a-k for a free spot > 0 reaches lo-1 exactly when
    // lo > 1 and a - lo < k.
    return Procedure("naples:k=" + std::to_string(k), {true, false, true},
                     [k](const State&, std::span<const Letter>, const SpotSet&, const Block& b,
                         const Letter& a) {
                         return b.lo > 1 && a - b.lo < k ? Direction::Left : Direction::Right;
                     });
}

Procedure far_procedure(FarConvention convention)
{
    std::string name = convention == FarConvention::Prose ? "far" : "far:convention=formal";
    return Procedure(std::move(name), {true, true, false},
                     [convention](const State&, std::span<const Letter>, const SpotSet& occupied,
                                  const Block&, const Letter& a) {
                         auto& spots = occupied.spots();
                         auto lower = std::lower_bound(spots.begin(), spots.end(), a);
                         auto upper = std::upper_bound(spots.begin(), spots.end(), a);
                         auto left_count = lower - spots.begin();
                         auto right_count = spots.end() - upper;
                         if (convention == FarConvention::Prose)
                             return right_count <= left_count ? Direction::Right : Direction::Left;
                         return left_count >= right_count ? Direction::Left : Direction::Right;
                     });
}

Procedure lbs_procedure()
{
    return Procedure(
        "lbs", {false, true, true},
        [](const State& state, std::span<const Letter>, const SpotSet&, const Block& b,
           const Letter& a) {
            auto last = detail::last_parker<Letter>(state, b.lo);
            if (!last) throw std::logic_error("lbs: block without a recorded last car");
            return a < *last ? Direction::Left : Direction::Right;
        },
        [](State& state, const Letter& a, Spot parked, const SpotSet& occupied) {
            detail::record_last_parker<Letter>(state, a, parked, occupied);
        });
}

Procedure table_procedure(DirTable table, std::string name)
{
    table.validate();
    return Procedure(std::move(name), kLocalMemoryless,
                     [table = std::move(table)](const State&, std::span<const Letter>,
                                                const SpotSet&, const Block& b, const Letter& a) {
                         return table.at(b.size(), static_cast<std::size_t>(a - b.lo + 1));
                     });
}

Procedure indexed_procedure(std::vector<Direction> by_car, Direction beyond)
{
    std::string seq;
    for (Direction d : by_car) seq += to_char(d);
    std::string name = "indexed:seq=" + seq + ",beyond=" + to_char(beyond);
    return Procedure(std::move(name), {true, true, false},
                     [by_car = std::move(by_car), beyond](const State&, std::span<const Letter>,
                                                          const SpotSet& occupied, const Block&,
                                                          const Letter&) {
                         std::size_t car = occupied.size() + 1;
                         return car <= by_car.size() ? by_car[car - 1] : beyond;
                     });
}

ProcSpec parse_proc_spec(std::string_view text)
{
    ProcSpec spec;
    auto colon = text.find(':');
    spec.name = std::string(text.substr(0, colon));
    if (spec.name.empty()) throw std::invalid_argument("empty procedure name");
    if (colon == std::string_view::npos) return spec;

    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
        auto comma = rest.find(',');
        std::string_view item = rest.substr(0, comma);
        auto eq = item.find('=');
        if (eq == std::string_view::npos || eq == 0 || eq + 1 == item.size())
            throw std::invalid_argument("bad parameter '" + std::string(item) + "'; expected key=value");
        std::string key(item.substr(0, eq));
        if (!spec.params.emplace(key, std::string(item.substr(eq + 1))).second)
            throw std::invalid_argument("duplicate parameter '" + key + "'");
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
        if (rest.empty()) throw std::invalid_argument("trailing comma in procedure spec");
    }
    return spec;
}

std::string format_proc_spec(const ProcSpec& spec)
{
    std::string out = spec.name;
    char sep = ':';
    for (const auto& [key, value] : spec.params) {
        out += sep;
        out += key + "=" + value;
        sep = ',';
    }
    return out;
}

Procedure builtin(std::string_view name, const Params& params)
{
    if (name == "right" || name == "left" || name == "closest" || name == "prime" ||
        name == "evenodd" || name == "lbs") {
        require_only(params, {}, name);
        if (name == "right") return right_procedure();
        if (name == "left") return left_procedure();
        if (name == "closest") return closest_procedure();
        if (name == "prime") return prime_procedure();
        if (name == "evenodd") return evenodd_procedure();
        return lbs_procedure();
    }
    if (name == "naples") {
        require_only(params, {"k"}, name);
        auto it = params.find("k");
        return naples_procedure(it == params.end() ? 1 : parse_int(it->second, "naples k"));
    }
    if (name == "far") {
        require_only(params, {"convention"}, name);
        auto it = params.find("convention");
        if (it == params.end() || it->second == "prose") return far_procedure(FarConvention::Prose);
        if (it->second == "formal") return far_procedure(FarConvention::Formal);
        throw std::invalid_argument("far convention must be 'prose' or 'formal'");
    }
    if (name == "indexed") {
        require_only(params, {"seq", "beyond"}, name);
        std::vector<Direction> seq;
        if (auto it = params.find("seq"); it != params.end())
            for (char c : it->second) seq.push_back(direction_from_char(c));
        Direction beyond = Direction::Right;
        if (auto it = params.find("beyond"); it != params.end()) {
            if (it->second.size() != 1) throw std::invalid_argument("indexed beyond must be L or R");
            beyond = direction_from_char(it->second[0]);
        }
        return indexed_procedure(std::move(seq), beyond);
    }
    throw std::invalid_argument("unknown procedure '" + std::string(name) + "'");
}

Procedure builtin(const ProcSpec& spec)
{
    return builtin(spec.name, spec.params);
}

std::vector<std::string> builtin_names()
{
    return {"right", "left", "closest", "prime", "evenodd", "naples", "far", "lbs", "indexed"};
}

} // namespace parking
