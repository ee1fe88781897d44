#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace utd {

/// Raised for caller-side contract violations (empty pattern, bad lengths).
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

using Symbol = std::uint16_t;

/// Ordered set of distinct raw characters. The code of a character is its
/// index in first-appearance order; code size() is reserved as the sentinel
/// for characters outside the alphabet.
class Alphabet
{
public:
    Alphabet() { index_.fill(kAbsent); }

    /// Distinct characters of raw, in order of first appearance.
    static Alphabet infer(std::string_view raw)
    {
        Alphabet a;
        for (char ch : raw)
            a.add(ch);
        return a;
    }

    /// Appends ch if not already present; returns its code.
    Symbol add(char ch)
    {
        auto& slot = index_[static_cast<unsigned char>(ch)];
        if (slot == kAbsent) {
            slot = static_cast<Symbol>(symbols_.size());
            symbols_.push_back(ch);
        }
        return slot;
    }

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    const std::string& symbols() const noexcept { return symbols_; }

    Symbol sentinel() const noexcept { return static_cast<Symbol>(symbols_.size()); }

    bool contains(char ch) const noexcept
    {
        return index_[static_cast<unsigned char>(ch)] != kAbsent;
    }

    Symbol code(char ch) const noexcept
    {
        auto c = index_[static_cast<unsigned char>(ch)];
        return c == kAbsent ? sentinel() : c;
    }

    /// Inverse of code(); the sentinel decodes to '?'.
    char symbol(Symbol c) const noexcept { return c < symbols_.size() ? symbols_[c] : '?'; }

private:
    static constexpr Symbol kAbsent = 0xffff;

    std::string symbols_;
    std::array<Symbol, 256> index_{};
};

/// Dense-coded symbol array. Codes are < sigma(), except the sentinel which
/// equals sigma() and matches nothing.
class Sequence
{
public:
    Sequence() = default;
    Sequence(std::vector<Symbol> codes, std::size_t sigma) : codes_(std::move(codes)), sigma_(sigma) {}

    std::size_t size() const noexcept { return codes_.size(); }
    bool empty() const noexcept { return codes_.empty(); }
    std::size_t sigma() const noexcept { return sigma_; }

    /// 1-based access, x[1..m].
    Symbol at(std::size_t pos) const { return codes_.at(pos - 1); }
    Symbol operator[](std::size_t idx) const noexcept { return codes_[idx]; }

    const std::vector<Symbol>& codes() const noexcept { return codes_; }
    auto begin() const noexcept { return codes_.begin(); }
    auto end() const noexcept { return codes_.end(); }

    friend bool operator==(const Sequence&, const Sequence&) = default;

private:
    std::vector<Symbol> codes_;
    std::size_t sigma_ = 0;
};

/// Strictly increasing 1-based end positions of full-pattern matches.
struct MatchReport
{
    std::vector<std::size_t> end_positions;

    std::size_t size() const noexcept { return end_positions.size(); }
    bool empty() const noexcept { return end_positions.empty(); }
    bool contains(std::size_t j) const;

    friend bool operator==(const MatchReport&, const MatchReport&) = default;
};

inline bool MatchReport::contains(std::size_t j) const
{
    for (auto p : end_positions)
        if (p == j)
            return true;
    return false;
}

inline Alphabet infer_alphabet(std::string_view raw) { return Alphabet::infer(raw); }

inline Sequence encode(std::string_view raw, const Alphabet& alphabet)
{
    std::vector<Symbol> codes;
    codes.reserve(raw.size());
    for (char ch : raw)
        codes.push_back(alphabet.code(ch));
    return Sequence(std::move(codes), alphabet.size());
}

inline std::string decode(const Sequence& seq, const Alphabet& alphabet)
{
    std::string out;
    out.reserve(seq.size());
    for (auto c : seq)
        out.push_back(alphabet.symbol(c));
    return out;
}

/// Encodes a pattern/text pair over the pattern's alphabet. Text characters
/// the pattern never uses become the sentinel.
struct EncodedPair
{
    Alphabet alphabet;
    Sequence pattern;
    Sequence text;
};

inline EncodedPair encode_pair(std::string_view pattern, std::string_view text)
{
    EncodedPair out;
    out.alphabet = Alphabet::infer(pattern);
    out.pattern = encode(pattern, out.alphabet);
    out.text = encode(text, out.alphabet);
    return out;
}

} // namespace utd
