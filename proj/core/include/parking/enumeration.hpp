#pragma once

#include "parking/count.hpp"
#include "parking/procedure.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace parking {

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EnumerationOptions {
    // Largest r enumerated exhaustively; (r+1)^r words are visited.
    int cap = 8;
    unsigned jobs = 0;
};

// Number of words of length r whose run occupies exactly {1..r}. Words are
// drawn from {1..r+1}^r, which contains every parking word.
Count count_parking(const Procedure& procedure, int r, const EnumerationOptions& options = {});

// All parking words of length r, in lexicographic order.
std::vector<Word> parking_words(const Procedure& procedure, int r,
                                const EnumerationOptions& options = {});

template <class W>
struct OrbitViolation {
    std::vector<W> members; // sorted
    Count parking_words = 0;
};

template <class W>
struct BasicOrbitReport {
    int r = 0;
    Count orbit_count = 0;
    // parking words per orbit -> number of orbits
    std::map<Count, Count> histogram;
    std::vector<OrbitViolation<W>> violations;

    bool ok() const { return violations.empty(); }

    Count parking_total() const
    {
        Count total = 0;
        for (const auto& [per_orbit, orbits] : histogram) total += per_orbit * orbits;
        return total;
    }
};

using OrbitReport = BasicOrbitReport<Word>;

// Parking words per cyclic orbit of {1..r+1}^r. Orbits with a count other
// than one are listed in `violations`.
OrbitReport orbit_audit(const Procedure& procedure, int r, const EnumerationOptions& options = {});

struct UniversalRow {
    int r = 0;
    Count count = 0;
    Count expected = 0;
};

struct UniversalReport {
    std::vector<UniversalRow> rows;
    std::optional<int> first_failure;

    bool passed() const { return !first_failure.has_value(); }
};

// count_parking(r) == (r+1)^(r-1) for r = 1..r_max. Stops at the first failure.
UniversalReport check_universal(const Procedure& procedure, int r_max,
                                const EnumerationOptions& options = {});

enum class CountMode { Brute, Formula };

// Number of words W of length |S| with P(W) = S.
//
// Brute enumerates every word whose letters lie in S (any other letter would
// park outside S). Formula applies the shuffle decomposition
// multinomial(|S|; block sizes) * prod (r_j+1)^(r_j-1), valid for local
// procedures only; std::invalid_argument otherwise.
Count count_words_to_set(const Procedure& procedure, const SpotSet& target, CountMode mode,
                         const EnumerationOptions& options = {});

// Brute count restricted to words over the letter window {lo..hi}.
Count count_words_to_set_in_window(const Procedure& procedure, const SpotSet& target, Letter lo,
                                   Letter hi, const EnumerationOptions& options = {});

// Tally of P(W) over all words of the given length over {lo..hi}.
std::map<SpotSet, Count> image_histogram(const Procedure& procedure, std::size_t length, Letter lo,
                                         Letter hi, const EnumerationOptions& options = {});

} // namespace parking
