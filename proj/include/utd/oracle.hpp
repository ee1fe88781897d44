#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "utd/seqcore.hpp"

namespace utd {

/// Every string a pattern can become under one layer of non-overlapping
/// adjacent-factor translocations.
struct ImageSet
{
    std::set<std::vector<Symbol>> images;

    std::size_t size() const noexcept { return images.size(); }
    bool contains(const std::vector<Symbol>& s) const { return images.count(s) != 0; }
};

inline constexpr std::size_t kDefaultImageCap = 1'000'000;

namespace detail {

/// Partitions x[pos..] into units: a copied symbol, or an adjacent pair
/// (z, w) emitted as wz.
inline void expand_images(const std::vector<Symbol>& x, std::size_t pos, std::vector<Symbol>& prefix,
                          ImageSet& out, std::size_t cap)
{
    const std::size_t m = x.size();
    if (pos == m) {
        out.images.insert(prefix);
        if (out.images.size() > cap)
            throw Error("image explosion");
        return;
    }
    const std::size_t mark = prefix.size();
    prefix.push_back(x[pos]);
    expand_images(x, pos + 1, prefix, out, cap);
    prefix.resize(mark);
    for (std::size_t h = 1; pos + h < m; ++h)
        for (std::size_t k = 1; pos + h + k <= m; ++k) {
            prefix.insert(prefix.end(), x.begin() + static_cast<std::ptrdiff_t>(pos + h),
                          x.begin() + static_cast<std::ptrdiff_t>(pos + h + k));
            prefix.insert(prefix.end(), x.begin() + static_cast<std::ptrdiff_t>(pos),
                          x.begin() + static_cast<std::ptrdiff_t>(pos + h));
            expand_images(x, pos + h + k, prefix, out, cap);
            prefix.resize(mark);
        }
}

} // namespace detail

inline ImageSet enumerate_images(const Sequence& pattern, std::size_t cap = kDefaultImageCap)
{
    if (pattern.empty())
        throw Error("empty pattern");
    ImageSet out;
    std::vector<Symbol> prefix;
    prefix.reserve(pattern.size());
    detail::expand_images(pattern.codes(), 0, prefix, out, cap);
    return out;
}

/// Brute force: j is reported iff y[j-m+1..j] is an image of the pattern.
inline MatchReport naive_search(const Sequence& pattern, const Sequence& text, std::size_t cap = kDefaultImageCap)
{
    const ImageSet images = enumerate_images(pattern, cap);
    const std::size_t m = pattern.size();
    MatchReport report;
    std::vector<Symbol> window(m);
    for (std::size_t j = m; j <= text.size(); ++j) {
        std::copy(text.begin() + static_cast<std::ptrdiff_t>(j - m), text.begin() + static_cast<std::ptrdiff_t>(j),
                  window.begin());
        if (images.contains(window))
            report.end_positions.push_back(j);
    }
    return report;
}

/// mu(0..K) evaluated literally:
///   mu(0) = 1,
///   mu(k+1) = sum_{h=0..k} mu(h) + sum_{h=1..floor((k-1)/2)} mu(k-2h-1).
struct MuTable
{
    std::vector<std::uint64_t> values;

    std::uint64_t operator()(std::size_t k) const { return values.at(k); }
};

inline MuTable mu(std::size_t max_index)
{
    MuTable t;
    t.values.assign(max_index + 1, 0);
    t.values[0] = 1;
    for (std::size_t k = 0; k + 1 <= max_index; ++k) {
        std::uint64_t v = 0;
        for (std::size_t h = 0; h <= k; ++h)
            v += t.values[h];
        // floor((k-1)/2) is negative for k = 0, leaving the sum empty.
        const std::size_t upper = k >= 1 ? (k - 1) / 2 : 0;
        for (std::size_t h = 1; h <= upper; ++h)
            v += t.values[k - 2 * h - 1];
        t.values[k + 1] = v;
    }
    return t;
}

} // namespace utd
