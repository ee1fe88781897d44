#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "utd/position_set.hpp"
#include "utd/seqcore.hpp"

namespace utd {

using StateId = std::int32_t;
inline constexpr StateId kNil = -1;

/// Directed acyclic word graph (factor automaton) of a pattern. States are
/// end-pos equivalence classes of factors; every state is final. Built online
/// with state cloning, then end-pos bitsets are filled bottom-up over the
/// suffix-link tree.
class Dawg
{
public:
    explicit Dawg(const Sequence& pattern);

    StateId root() const noexcept { return 0; }
    std::size_t size() const noexcept { return len_.size(); }
    std::size_t sigma() const noexcept { return sigma_; }
    std::size_t pattern_length() const noexcept { return m_; }

    StateId next(StateId q, Symbol c) const noexcept
    {
        return c < sigma_ ? next_[static_cast<std::size_t>(q) * sigma_ + c] : kNil;
    }

    /// Suffix link; kNil for the root.
    StateId suf(StateId q) const noexcept { return suf_[q]; }

    /// Nearest suffix-link ancestor with strictly more outgoing transitions.
    /// Ancestors with the same label set cannot have a transition q lacks.
    StateId isuf(StateId q) const noexcept { return isuf_[q]; }

    /// len(val(q)).
    std::size_t len(StateId q) const noexcept { return static_cast<std::size_t>(len_[q]); }

    /// len(suf(q)), with -1 for the root.
    std::int64_t suffix_len(StateId q) const noexcept { return suf_[q] == kNil ? -1 : len_[suf_[q]]; }

    const PositionSet& end_pos(StateId q) const noexcept { return end_pos_[q]; }

    /// i in end-pos(q), for 1 <= i <= m; out-of-range i is simply absent.
    bool end_pos_contains(StateId q, std::size_t i) const noexcept { return end_pos_[q].contains(i); }

    std::size_t out_degree(StateId q) const noexcept { return out_degree_[q]; }
    std::size_t transition_count() const noexcept;

    /// State reached by spelling w from the root, or kNil if w is not a factor.
    StateId walk(std::span<const Symbol> w) const noexcept;

    /// State reached by the pattern prefix of length i (1 <= i <= m).
    StateId prefix_state(std::size_t i) const { return prefix_state_.at(i - 1); }

    /// The suffix-path node of q whose class holds the length-k suffix of
    /// val(q): the first p on <q, suf(q), ...> with len(suf(p)) < k <= len(p).
    StateId phi(StateId q, std::size_t k) const;

    /// Bytes held by the transition table, links, lengths and end-pos bitsets.
    std::size_t footprint_bytes() const noexcept;

private:
    StateId new_state(std::int64_t len, StateId link);

    std::size_t sigma_ = 0;
    std::size_t m_ = 0;
    std::vector<StateId> next_;
    std::vector<StateId> suf_;
    std::vector<StateId> isuf_;
    std::vector<std::int64_t> len_;
    std::vector<std::uint32_t> out_degree_;
    std::vector<PositionSet> end_pos_;
    std::vector<StateId> prefix_state_;
};

inline Dawg build_dawg(const Sequence& pattern) { return Dawg(pattern); }

/// (q_j, l_j): DAWG state and length of the longest pattern factor that is a
/// suffix of the scanned text prefix.
struct YConfig
{
    StateId state = 0;
    std::size_t length = 0;

    friend bool operator==(const YConfig&, const YConfig&) = default;
};

/// Advances a y-configuration by one text symbol. hops accumulates the number
/// of improved-suffix-link traversals.
inline YConfig dawg_delta(const YConfig& config, Symbol c, const Dawg& dawg, std::uint64_t& hops)
{
    StateId q = config.state;
    if (StateId t = dawg.next(q, c); t != kNil)
        return {t, config.length + 1};
    do {
        q = dawg.isuf(q);
        ++hops;
    } while (q != kNil && dawg.next(q, c) == kNil);
    if (q == kNil)
        return {dawg.root(), 0};
    return {dawg.next(q, c), dawg.len(q) + 1};
}

inline YConfig dawg_delta(const YConfig& config, Symbol c, const Dawg& dawg)
{
    std::uint64_t hops = 0;
    return dawg_delta(config, c, dawg, hops);
}

inline StateId phi(StateId q, std::size_t k, const Dawg& dawg) { return dawg.phi(q, k); }

inline bool end_pos_contains(StateId q, std::size_t i, const Dawg& dawg) { return dawg.end_pos_contains(q, i); }

/// Tracks phi(q, k) while k decreases by one per step: before visiting length
/// k, at most one suffix link is followed.
class SuffixPathCursor
{
public:
    SuffixPathCursor(const Dawg& dawg, StateId start) noexcept : dawg_(&dawg), state_(start) {}

    /// Moves to phi(start, k). Requires k to be one less than the previous
    /// call's k (or <= len(start) on the first call). Returns true on a hop.
    bool descend_to(std::size_t k) noexcept
    {
        if (static_cast<std::int64_t>(k) == dawg_->suffix_len(state_)) {
            state_ = dawg_->suf(state_);
            return true;
        }
        return false;
    }

    StateId state() const noexcept { return state_; }

private:
    const Dawg* dawg_;
    StateId state_;
};

/// Plain-text dump: one `src -> dst [symbol]` line per transition, then one
/// `src ~> dst` line per suffix link. With an alphabet, symbols print as
/// characters; otherwise as codes.
inline void dump(std::ostream& os, const Dawg& dawg, const Alphabet* alphabet = nullptr);

// ---------------------------------------------------------------------------

inline StateId Dawg::new_state(std::int64_t len, StateId link)
{
    auto id = static_cast<StateId>(len_.size());
    len_.push_back(len);
    suf_.push_back(link);
    next_.resize(next_.size() + sigma_, kNil);
    return id;
}

inline Dawg::Dawg(const Sequence& pattern) : m_(pattern.size())
{
    if (pattern.empty())
        throw Error("empty pattern");
    sigma_ = pattern.sigma();
    for (auto c : pattern)
        if (c >= sigma_)
            throw Error("pattern symbol outside alphabet");

    len_.reserve(2 * m_ + 1);
    suf_.reserve(2 * m_ + 1);
    next_.reserve((2 * m_ + 1) * sigma_);
    prefix_state_.reserve(m_);

    new_state(0, kNil);
    StateId last = 0;
    auto edge = [this](StateId q, Symbol c) -> StateId& { return next_[static_cast<std::size_t>(q) * sigma_ + c]; };

    for (auto c : pattern) {
        StateId cur = new_state(len_[last] + 1, kNil);
        StateId p = last;
        while (p != kNil && edge(p, c) == kNil) {
            edge(p, c) = cur;
            p = suf_[p];
        }
        if (p == kNil) {
            suf_[cur] = 0;
        } else {
            StateId q = edge(p, c);
            if (len_[p] + 1 == len_[q]) {
                suf_[cur] = q;
            } else {
                StateId clone = new_state(len_[p] + 1, suf_[q]);
                std::copy_n(next_.begin() + static_cast<std::ptrdiff_t>(q) * sigma_, sigma_,
                            next_.begin() + static_cast<std::ptrdiff_t>(clone) * sigma_);
                while (p != kNil && edge(p, c) == q) {
                    edge(p, c) = clone;
                    p = suf_[p];
                }
                suf_[q] = clone;
                suf_[cur] = clone;
            }
        }
        last = cur;
        prefix_state_.push_back(cur);
    }

    const std::size_t n_states = len_.size();
    out_degree_.assign(n_states, 0);
    for (std::size_t q = 0; q < n_states; ++q)
        for (std::size_t c = 0; c < sigma_; ++c)
            out_degree_[q] += next_[q * sigma_ + c] != kNil;

    // Label sets only grow along a suffix path, so comparing degrees suffices.
    isuf_.assign(n_states, kNil);
    for (std::size_t q = 1; q < n_states; ++q) {
        StateId p = suf_[q];
        while (p != kNil && out_degree_[p] == out_degree_[q])
            p = suf_[p];
        isuf_[q] = p;
    }

    end_pos_.assign(n_states, PositionSet(m_ + 1));
    for (std::size_t i = 1; i <= m_; ++i)
        end_pos_[prefix_state_[i - 1]].insert(i);

    // Children before parents: counting sort by decreasing len.
    std::vector<std::size_t> bucket(m_ + 2, 0);
    for (auto l : len_)
        ++bucket[static_cast<std::size_t>(l)];
    for (std::size_t l = 1; l < bucket.size(); ++l)
        bucket[l] += bucket[l - 1];
    std::vector<StateId> order(n_states);
    for (std::size_t q = n_states; q-- > 0;)
        order[--bucket[static_cast<std::size_t>(len_[q])]] = static_cast<StateId>(q);
    for (std::size_t idx = n_states; idx-- > 1;) {
        StateId q = order[idx];
        if (suf_[q] != kNil)
            end_pos_[suf_[q]].unite(end_pos_[q]);
    }
}

inline std::size_t Dawg::transition_count() const noexcept
{
    std::size_t total = 0;
    for (auto d : out_degree_)
        total += d;
    return total;
}

inline StateId Dawg::walk(std::span<const Symbol> w) const noexcept
{
    StateId q = root();
    for (auto c : w) {
        q = next(q, c);
        if (q == kNil)
            return kNil;
    }
    return q;
}

inline StateId Dawg::phi(StateId q, std::size_t k) const
{
    if (k < 1 || k > len(q))
        throw Error("invalid suffix length");
    while (suffix_len(q) >= static_cast<std::int64_t>(k))
        q = suf_[q];
    return q;
}

inline std::size_t Dawg::footprint_bytes() const noexcept
{
    std::size_t bytes = next_.capacity() * sizeof(StateId) + suf_.capacity() * sizeof(StateId) +
                        isuf_.capacity() * sizeof(StateId) + len_.capacity() * sizeof(std::int64_t) +
                        out_degree_.capacity() * sizeof(std::uint32_t) +
                        prefix_state_.capacity() * sizeof(StateId);
    for (const auto& e : end_pos_)
        bytes += e.footprint_bytes();
    return bytes;
}

inline void dump(std::ostream& os, const Dawg& dawg, const Alphabet* alphabet)
{
    for (StateId q = 0; q < static_cast<StateId>(dawg.size()); ++q)
        for (std::size_t c = 0; c < dawg.sigma(); ++c)
            if (StateId t = dawg.next(q, static_cast<Symbol>(c)); t != kNil) {
                os << q << " -> " << t << " [";
                if (alphabet)
                    os << alphabet->symbol(static_cast<Symbol>(c));
                else
                    os << c;
                os << "]\n";
            }
    for (StateId q = 1; q < static_cast<StateId>(dawg.size()); ++q)
        os << q << " ~> " << dawg.suf(q) << '\n';
}

} // namespace utd
