#pragma once

// Test-only reference computations, written directly from the definitions
// and independent of the engines under test.

#include <cstddef>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "utd/seqcore.hpp"

namespace utd::testing {

/// Length of the longest common suffix of x_i and y_j (1-based prefixes).
inline std::size_t common_suffix(const Sequence& x, std::size_t i, const Sequence& y, std::size_t j)
{
    std::size_t l = 0;
    while (l < i && l < j && x[i - 1 - l] == y[j - 1 - l])
        ++l;
    return l;
}

/// Positions i in x at which y[j-k+1..j] ends.
inline std::set<std::size_t> occurrences_of_text_suffix(const Sequence& x, const Sequence& y, std::size_t j,
                                                        std::size_t k)
{
    std::set<std::size_t> out;
    for (std::size_t i = k; i <= x.size(); ++i)
        if (common_suffix(x, i, y, j) >= k)
            out.insert(i);
    return out;
}

/// End positions (1-based) of every occurrence of w in x.
inline std::set<std::size_t> end_positions(const std::vector<Symbol>& x, const std::vector<Symbol>& w)
{
    std::set<std::size_t> out;
    if (w.size() > x.size())
        return out;
    for (std::size_t e = w.size(); e <= x.size(); ++e) {
        bool hit = true;
        for (std::size_t t = 0; t < w.size() && hit; ++t)
            hit = x[e - w.size() + t] == w[t];
        if (hit)
            out.insert(e);
    }
    return out;
}

/// Longest l such that y[j-l+1..j] is a factor of x.
inline std::size_t longest_factor_suffix(const Sequence& x, const Sequence& y, std::size_t j)
{
    std::size_t best = 0;
    for (std::size_t l = 1; l <= j && l <= x.size(); ++l) {
        std::vector<Symbol> w(y.begin() + static_cast<std::ptrdiff_t>(j - l), y.begin() + static_cast<std::ptrdiff_t>(j));
        if (!end_positions(x.codes(), w).empty())
            best = l;
    }
    return best;
}

inline Sequence random_sequence(std::mt19937_64& rng, std::size_t length, std::size_t sigma)
{
    std::vector<Symbol> codes(length);
    for (auto& c : codes)
        c = static_cast<Symbol>(rng() % sigma);
    return Sequence(std::move(codes), sigma);
}

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi)
{
    return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

inline Sequence from_string(std::string_view s, const Alphabet& a) { return encode(s, a); }

inline std::set<std::size_t> as_set(const std::vector<std::size_t>& v) { return {v.begin(), v.end()}; }

} // namespace utd::testing
