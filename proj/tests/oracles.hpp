#pragma once

// Slow, independent reimplementations used to cross-check the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Word = std::vector<std::int64_t>;

// Classical parking functions: sorted letters satisfy b_i <= i.
inline bool classical_parking(Word w)
{
    std::sort(w.begin(), w.end());
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] < 1 || w[i] > static_cast<std::int64_t>(i + 1)) return false;
    return true;
}

// go_right(occupied, lo, hi, a) for an occupied preference a inside block [lo, hi].
using Rule = std::function<bool(const std::set<std::int64_t>&, std::int64_t, std::int64_t, std::int64_t)>;

struct NaiveRun {
    std::set<std::int64_t> occupied;
    std::vector<std::int64_t> spot_of_car;
};

inline NaiveRun naive_run(const Word& w, const Rule& go_right)
{
    NaiveRun out;
    for (std::int64_t a : w) {
        std::int64_t spot = a;
        if (out.occupied.count(a)) {
            std::int64_t lo = a, hi = a;
            while (out.occupied.count(lo - 1)) --lo;
            while (out.occupied.count(hi + 1)) ++hi;
            spot = go_right(out.occupied, lo, hi, a) ? hi + 1 : lo - 1;
        }
        out.occupied.insert(spot);
        out.spot_of_car.push_back(spot);
    }
    return out;
}

inline std::vector<Word> all_words(std::size_t length, std::int64_t lo, std::int64_t hi)
{
    std::vector<Word> out{Word{}};
    for (std::size_t k = 0; k < length; ++k) {
        std::vector<Word> next;
        for (const Word& w : out)
            for (std::int64_t a = lo; a <= hi; ++a) {
                Word v = w;
                v.push_back(a);
                next.push_back(v);
            }
        out = std::move(next);
    }
    return out;
}

inline void shuffle_into(const std::vector<Word>& parts, std::vector<std::size_t>& pos, Word& acc,
                         std::vector<Word>& out)
{
    bool done = true;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (pos[p] == parts[p].size()) continue;
        done = false;
        acc.push_back(parts[p][pos[p]++]);
        shuffle_into(parts, pos, acc, out);
        --pos[p];
        acc.pop_back();
    }
    if (done) out.push_back(acc);
}

// Interleavings listed with multiplicity (one per choice sequence).
inline std::vector<Word> shuffles(const std::vector<Word>& parts)
{
    std::vector<std::size_t> pos(parts.size(), 0);
    Word acc;
    std::vector<Word> out;
    shuffle_into(parts, pos, acc, out);
    return out;
}

// Decreasing labelings of a tree given by parent pointers (-1 for roots),
// counted by trying every bijection to {1..n}.
inline std::uint64_t decreasing_labelings(const std::vector<int>& parent)
{
    std::vector<int> labels(parent.size());
    std::iota(labels.begin(), labels.end(), 1);
    std::uint64_t count = 0;
    do {
        bool ok = true;
        for (std::size_t n = 0; n < parent.size() && ok; ++n)
            if (parent[n] >= 0 && labels[n] > labels[static_cast<std::size_t>(parent[n])]) ok = false;
        if (ok) ++count;
    } while (std::next_permutation(labels.begin(), labels.end()));
    return count;
}

inline std::uint64_t factorial(unsigned n)
{
    std::uint64_t f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

inline std::uint64_t power(std::uint64_t b, unsigned e)
{
    std::uint64_t out = 1;
    while (e--) out *= b;
    return out;
}

} // namespace oracle
