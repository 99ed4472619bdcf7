#include "parking/enumeration.hpp"

#include "parking/parallel.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace parking {

namespace {

void check_cap(int r, const EnumerationOptions& options)
{
    if (r < 1) throw std::domain_error("exhaustive enumeration needs r >= 1");
    if (r > options.cap)
        throw CapExceeded("r = " + std::to_string(r) + " exceeds the exhaustive cap " +
                          std::to_string(options.cap));
}

bool parks_on_prefix(const Procedure& procedure, const Word& word)
{
    bool parking = is_parking<Letter>(procedure, word);
#ifndef NDEBUG
    // Every parking word of length r only uses letters 1..r: a car asking
    // for r+1 either takes it or finds it already taken.
    if (parking) {
        for (Letter a : word) assert(1 <= a && a <= static_cast<Letter>(word.size()));
    }
#endif
    return parking;
}

} // namespace

Count count_parking(const Procedure& procedure, int r, const EnumerationOptions& options)
{
    check_cap(r, options);
    auto partial = map_tasks<Count>(static_cast<std::size_t>(r + 1), options.jobs, [&](std::size_t i) {
        Count count = 0;
        for_each_word(
            static_cast<std::size_t>(r), 1, r + 1,
            [&](const Word& word) {
                if (parks_on_prefix(procedure, word)) ++count;
            },
            Word{static_cast<Letter>(i + 1)});
        return count;
    });
    Count total = 0;
    for (Count c : partial) total += c;
    return total;
}

std::vector<Word> parking_words(const Procedure& procedure, int r, const EnumerationOptions& options)
{
    check_cap(r, options);
    auto partial = map_tasks<std::vector<Word>>(
        static_cast<std::size_t>(r + 1), options.jobs, [&](std::size_t i) {
            std::vector<Word> found;
            for_each_word(
                static_cast<std::size_t>(r), 1, r + 1,
                [&](const Word& word) {
                    if (parks_on_prefix(procedure, word)) found.push_back(word);
                },
                Word{static_cast<Letter>(i + 1)});
            return found;
        });
    std::vector<Word> all;
    for (auto& part : partial) all.insert(all.end(), part.begin(), part.end());
    return all;
}

OrbitReport orbit_audit(const Procedure& procedure, int r, const EnumerationOptions& options)
{
    check_cap(r, options);
    struct Partial {
        std::map<Count, Count> histogram;
        std::vector<OrbitViolation<Word>> violations;
        Count orbits = 0;
    };

    // Rotation moves the first letter through all of {1..r+1}, so orbits of
    // nonempty words have exactly r+1 members and the members starting with
    // 1 are representatives. Split the representatives by their second letter.
    std::size_t tasks = r >= 2 ? static_cast<std::size_t>(r + 1) : 1;
    auto partial = map_tasks<Partial>(tasks, options.jobs, [&](std::size_t i) {
        Partial out;
        Word prefix{1};
        if (r >= 2) prefix.push_back(static_cast<Letter>(i + 1));
        for_each_word(
            static_cast<std::size_t>(r), 1, r + 1,
            [&](const Word& representative) {
                std::vector<Word> members;
                Count parking = 0;
                Word current = representative;
                for (int k = 0; k <= r; ++k) {
                    if (parks_on_prefix(procedure, current)) ++parking;
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
            prefix);
        return out;
    });

    OrbitReport report;
    report.r = r;
    for (auto& part : partial) {
        report.orbit_count += part.orbits;
        for (const auto& [k, v] : part.histogram) report.histogram[k] += v;
        for (auto& violation : part.violations) report.violations.push_back(std::move(violation));
    }
    return report;
}

UniversalReport check_universal(const Procedure& procedure, int r_max, const EnumerationOptions& options)
{
    UniversalReport report;
    for (int r = 1; r <= r_max; ++r) {
        UniversalRow row{r, count_parking(procedure, r, options), cayley_count(static_cast<unsigned>(r))};
        report.rows.push_back(row);
        if (row.count != row.expected) {
            report.first_failure = r;
            break;
        }
    }
    return report;
}

Count count_words_to_set_in_window(const Procedure& procedure, const SpotSet& target, Letter lo,
                                   Letter hi, const EnumerationOptions& options)
{
    std::size_t length = target.size();
    if (length == 0) return 1;
    if (static_cast<int>(length) > options.cap)
        throw CapExceeded("|S| = " + std::to_string(length) + " exceeds the exhaustive cap");
    if (hi < lo) return 0;
    Count words = ipow(static_cast<Count>(hi - lo + 1), static_cast<unsigned>(length));
    if (words > Count{2'000'000'000})
        throw CapExceeded("letter window too large for brute-force counting");

    auto partial = map_tasks<Count>(static_cast<std::size_t>(hi - lo + 1), options.jobs, [&](std::size_t i) {
        Count count = 0;
        for_each_word(
            length, lo, hi,
            [&](const Word& word) {
                if (run<Letter>(procedure, word).occupied == target) ++count;
            },
            Word{lo + static_cast<Letter>(i)});
        return count;
    });
    Count total = 0;
    for (Count c : partial) total += c;
    return total;
}

Count count_words_to_set(const Procedure& procedure, const SpotSet& target, CountMode mode,
                         const EnumerationOptions& options)
{
    if (mode == CountMode::Formula) {
        if (!procedure.flags().local())
            throw std::invalid_argument("shuffle formula needs a local procedure; " + procedure.name() +
                                        " is not declared local");
        std::vector<std::size_t> sizes;
        Count product = 1;
        for (const Block& b : target.blocks()) {
            sizes.push_back(b.size());
            product *= cayley_count(static_cast<unsigned>(b.size()));
        }
        return multinomial(sizes) * product;
    }

    std::size_t length = target.size();
    if (length == 0) return 1;
    if (static_cast<int>(length) > options.cap)
        throw CapExceeded("|S| = " + std::to_string(length) + " exceeds the exhaustive cap");

    // Words over the elements of S: enumerate index words and map them.
    const auto& spots = target.spots();
    auto n = static_cast<Letter>(spots.size());
    auto partial = map_tasks<Count>(spots.size(), options.jobs, [&](std::size_t i) {
        Count count = 0;
        Word word(length);
        for_each_word(
            length, 0, n - 1,
            [&](const Word& index) {
                for (std::size_t k = 0; k < length; ++k) word[k] = spots[static_cast<std::size_t>(index[k])];
                if (run<Letter>(procedure, word).occupied == target) ++count;
            },
            Word{static_cast<Letter>(i)});
        return count;
    });
    Count total = 0;
    for (Count c : partial) total += c;
    return total;
}

std::map<SpotSet, Count> image_histogram(const Procedure& procedure, std::size_t length, Letter lo,
                                         Letter hi, const EnumerationOptions& options)
{
    if (static_cast<int>(length) > options.cap)
        throw CapExceeded("length exceeds the exhaustive cap");
    std::map<SpotSet, Count> histogram;
    if (length == 0) {
        histogram[SpotSet{}] = 1;
        return histogram;
    }
    auto partial = map_tasks<std::map<SpotSet, Count>>(
        static_cast<std::size_t>(std::max<Letter>(hi - lo + 1, 0)), options.jobs, [&](std::size_t i) {
            std::map<SpotSet, Count> part;
            for_each_word(
                length, lo, hi, [&](const Word& word) { ++part[run<Letter>(procedure, word).occupied]; },
                Word{lo + static_cast<Letter>(i)});
            return part;
        });
    for (auto& part : partial)
        for (const auto& [set, c] : part) histogram[set] += c;
    return histogram;
}

} // namespace parking
