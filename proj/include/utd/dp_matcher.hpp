#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "utd/seqcore.hpp"

namespace utd {

/// F[i,j] for one cell: the longest common suffix of x_i and y_j, given
/// F[i-1,j-1].
constexpr std::uint32_t f_cell(std::uint32_t prev_diag, Symbol xi, Symbol yj) noexcept
{
    return xi == yj ? prev_diag + 1 : 0;
}

/// The last m+1 columns of the F and P matrices.
///
/// F[i,j] is the length of the longest common suffix of x_i and y_j, so
/// i in F^k_j iff F[i,j] >= k. P[i,j] holds iff x_i utd-matches a suffix of
/// y_j; row 0 is always true. Column j may read back to column j-m (a
/// translocation with h+k = m), hence m+1 slots.
class DpColumns
{
public:
    explicit DpColumns(std::size_t m) : m_(m), slots_(m + 1), f_(slots_ * (m + 1), 0), p_(slots_ * (m + 1), 0)
    {
        p_[index(0, 0)] = 1;
    }

    std::size_t pattern_length() const noexcept { return m_; }

    /// Last column computed (0 before any text symbol).
    std::size_t column() const noexcept { return j_; }

    /// Whether column j is still held by the ring.
    bool holds(std::size_t j) const noexcept { return j <= j_ && j + m_ >= j_; }

    std::uint32_t F(std::size_t i, std::size_t j) const noexcept { return f_[index(i, j)]; }
    bool P(std::size_t i, std::size_t j) const noexcept { return p_[index(i, j)] != 0; }

    /// {i : F[i,j] >= k}, ascending.
    std::vector<std::size_t> f_set(std::size_t j, std::size_t k) const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 1; i <= m_; ++i)
            if (F(i, j) >= k)
                out.push_back(i);
        return out;
    }

    /// Computes column j+1 from text symbol yj and returns P[m, j+1].
    bool advance(const Sequence& pattern, Symbol yj);

    std::size_t footprint_bytes() const noexcept
    {
        return f_.capacity() * sizeof(std::uint32_t) + p_.capacity() * sizeof(std::uint8_t);
    }

private:
    std::size_t index(std::size_t i, std::size_t j) const noexcept { return (j % slots_) * (m_ + 1) + i; }

    std::size_t m_;
    std::size_t slots_;
    std::size_t j_ = 0;
    std::vector<std::uint32_t> f_;
    std::vector<std::uint8_t> p_;
};

/// P[i,j] by the two-case recurrence: (a) x[i] = y[j] and P[i-1,j-1]; or
/// (b) for some h, k >= 1 with h+k <= i and j-h-k >= 0: F[i-k,j] >= h,
/// F[i,j-h] >= k and P[i-h-k, j-h-k]. Column j of F must already be filled;
/// only columns j-m..j are read.
inline bool p_cell(std::size_t i, std::size_t j, const DpColumns& cols, Symbol xi, Symbol yj)
{
    if (xi == yj && cols.P(i - 1, j - 1))
        return true;
    for (std::size_t k = 1; k < i; ++k) {
        // F[i-k,j] >= h bounds h, and F[i-k,j] <= i-k already.
        const std::size_t h_max = std::min<std::size_t>(cols.F(i - k, j), j - std::min(j, k));
        for (std::size_t h = 1; h <= h_max; ++h)
            if (cols.F(i, j - h) >= k && cols.P(i - h - k, j - h - k))
                return true;
    }
    return false;
}

inline bool DpColumns::advance(const Sequence& pattern, Symbol yj)
{
    const std::size_t j = ++j_;
    f_[index(0, j)] = 0;
    p_[index(0, j)] = 1;
    for (std::size_t i = 1; i <= m_; ++i)
        f_[index(i, j)] = f_cell(F(i - 1, j - 1), pattern[i - 1], yj);
    for (std::size_t i = 1; i <= m_; ++i)
        p_[index(i, j)] = i <= j && p_cell(i, j, *this, pattern[i - 1], yj);
    return P(m_, j);
}

/// Streaming dynamic-programming matcher; O(m^3) per text symbol worst case,
/// O(m^2) memory.
class DpMatcher
{
public:
    explicit DpMatcher(const Sequence& pattern) : pattern_(pattern), cols_(pattern.size())
    {
        if (pattern.empty())
            throw Error("empty pattern");
    }

    /// Consumes the next text symbol; true iff a match ends here.
    bool feed(Symbol c) { return cols_.advance(pattern_, c); }

    std::size_t position() const noexcept { return cols_.column(); }
    const DpColumns& columns() const noexcept { return cols_; }

private:
    Sequence pattern_;
    DpColumns cols_;
};

inline MatchReport dp_search(const Sequence& pattern, const Sequence& text)
{
    if (pattern.empty())
        throw Error("empty pattern");
    MatchReport report;
    if (pattern.size() > text.size())
        return report;
    DpMatcher matcher(pattern);
    for (auto c : text)
        if (matcher.feed(c))
            report.end_positions.push_back(matcher.position());
    return report;
}

} // namespace utd
