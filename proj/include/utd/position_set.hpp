#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace utd {

/// Fixed-capacity bitset over positions 0..capacity-1. Used for end-pos sets
/// (positions 1..m) and prefix sets (lengths 0..m).
class PositionSet
{
public:
    PositionSet() = default;
    explicit PositionSet(std::size_t capacity) : words_((capacity + 63) / 64, 0), capacity_(capacity) {}

    std::size_t capacity() const noexcept { return capacity_; }

    bool contains(std::size_t i) const noexcept
    {
        return i < capacity_ && (words_[i >> 6] >> (i & 63) & 1u) != 0;
    }

    void insert(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

    void clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

    void unite(const PositionSet& other) noexcept
    {
        for (std::size_t w = 0; w < words_.size(); ++w)
            words_[w] |= other.words_[w];
    }

    bool is_subset_of(const PositionSet& other) const noexcept
    {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if ((words_[w] & ~other.words_[w]) != 0)
                return false;
        return true;
    }

    std::size_t count() const noexcept
    {
        std::size_t total = 0;
        for (auto w : words_)
            total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    bool empty() const noexcept
    {
        return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
    }

    /// Calls fn(i) for every member i <= limit, in ascending order.
    template <typename Fn>
    void for_each_upto(std::size_t limit, Fn&& fn) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                std::size_t i = (w << 6) + static_cast<std::size_t>(std::countr_zero(bits));
                if (i > limit)
                    return;
                fn(i);
                bits &= bits - 1;
            }
        }
    }

    template <typename Fn>
    void for_each(Fn&& fn) const
    {
        for_each_upto(capacity_, std::forward<Fn>(fn));
    }

    std::vector<std::size_t> members() const
    {
        std::vector<std::size_t> out;
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    /// Bytes held by the word storage.
    std::size_t footprint_bytes() const noexcept { return words_.capacity() * sizeof(std::uint64_t); }

    friend bool operator==(const PositionSet&, const PositionSet&) = default;

private:
    std::vector<std::uint64_t> words_;
    std::size_t capacity_ = 0;
};

} // namespace utd
