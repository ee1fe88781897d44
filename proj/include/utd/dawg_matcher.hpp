#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "utd/dawg.hpp"
#include "utd/position_set.hpp"
#include "utd/seqcore.hpp"

namespace utd {

/// Work counters for one automaton search.
struct OpCounter
{
    std::uint64_t delta_steps = 0;      ///< configuration updates plus improved-suffix-link hops
    std::uint64_t suffix_hops = 0;      ///< suffix links followed while tracking phi in the h/k loops
    std::uint64_t inner_iterations = 0; ///< (h, k, i) candidates examined
    std::uint64_t endpos_queries = 0;   ///< end-pos membership tests
    std::uint64_t insertions = 0;       ///< insertions into a prefix set

    OpCounter& operator+=(const OpCounter& o) noexcept
    {
        delta_steps += o.delta_steps;
        suffix_hops += o.suffix_hops;
        inner_iterations += o.inner_iterations;
        endpos_queries += o.endpos_queries;
        insertions += o.insertions;
        return *this;
    }

    friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

/// Ring buffers of the last m+1 y-configurations and prefix sets P_{j-m..j}.
/// Each prefix set is a bitset over 0..m with bit 0 always set.
class SearchState
{
public:
    explicit SearchState(std::size_t m) : m_(m), configs_(m + 1), prefix_sets_(m + 1, PositionSet(m + 1))
    {
        prefix_sets_[0].insert(0);
    }

    std::size_t position() const noexcept { return j_; }
    bool holds(std::size_t j) const noexcept { return j <= j_ && j + m_ >= j_; }

    const YConfig& config(std::size_t j) const noexcept { return configs_[j % (m_ + 1)]; }
    const PositionSet& prefix_set(std::size_t j) const noexcept { return prefix_sets_[j % (m_ + 1)]; }

    std::size_t footprint_bytes() const noexcept
    {
        std::size_t bytes = configs_.capacity() * sizeof(YConfig);
        for (const auto& p : prefix_sets_)
            bytes += p.footprint_bytes() + sizeof(PositionSet);
        return bytes;
    }

private:
    friend class AutomatonMatcher;

    YConfig& config_slot(std::size_t j) noexcept { return configs_[j % (m_ + 1)]; }
    PositionSet& prefix_slot(std::size_t j) noexcept { return prefix_sets_[j % (m_ + 1)]; }

    std::size_t m_;
    std::size_t j_ = 0;
    std::vector<YConfig> configs_;
    std::vector<PositionSet> prefix_sets_;
};

/// Streaming automaton matcher. Consumes the text one symbol at a time; the
/// working state never exceeds O(m^2) regardless of text length.
class AutomatonMatcher
{
public:
    /// dawg must be the automaton of pattern and outlive the matcher.
    AutomatonMatcher(const Dawg& dawg, const Sequence& pattern) : dawg_(&dawg), pattern_(pattern), state_(pattern.size())
    {
        if (pattern.empty())
            throw Error("empty pattern");
        if (dawg.pattern_length() != pattern.size())
            throw Error("automaton does not belong to pattern");
    }

    /// Processes y[j] for the next position j; returns true iff m in P_j.
    bool step(Symbol c);

    std::size_t position() const noexcept { return state_.position(); }
    const SearchState& state() const noexcept { return state_; }
    const OpCounter& counters() const noexcept { return counters_; }

    /// F^k_j = end-pos(phi(q_j, k)); empty when k = 0 or k > l_j. j must lie
    /// within the last m+1 positions.
    PositionSet f_set(std::size_t j, std::size_t k) const;

    /// Working memory: configurations, prefix sets and the automaton.
    std::size_t footprint_bytes() const noexcept { return state_.footprint_bytes() + dawg_->footprint_bytes(); }

private:
    const Dawg* dawg_;
    Sequence pattern_;
    SearchState state_;
    OpCounter counters_;
};

inline bool AutomatonMatcher::step(Symbol c)
{
    const Dawg& dawg = *dawg_;
    const std::size_t m = pattern_.size();
    const std::size_t j = ++state_.j_;

    ++counters_.delta_steps;
    const YConfig cfg = dawg_delta(state_.config(j - 1), c, dawg, counters_.delta_steps);
    state_.config_slot(j) = cfg;

    PositionSet& pj = state_.prefix_slot(j);
    pj.clear();
    pj.insert(0);

    // Extension: x_i matched at j-1 and x[i+1] = y[j].
    state_.prefix_set(j - 1).for_each_upto(m - 1, [&](std::size_t i) {
        if (pattern_[i] == c) {
            pj.insert(i + 1);
            ++counters_.insertions;
        }
    });

    // Translocation: z = x[i+1..i+h] ends the text at j, w = x[i+h+1..i+h+k]
    // ends it at j-h, and x_i matched at j-h-k.
    SuffixPathCursor u(dawg, cfg.state);
    for (std::size_t h = cfg.length; h >= 1; --h) {
        counters_.suffix_hops += u.descend_to(h);
        if (h >= m)
            continue;
        const YConfig& back = state_.config(j - h);
        SuffixPathCursor p(dawg, back.state);
        for (std::size_t k = back.length; k >= 1; --k) {
            counters_.suffix_hops += p.descend_to(k);
            if (h + k > m)
                continue;
            state_.prefix_set(j - h - k).for_each_upto(m - h - k, [&](std::size_t i) {
                ++counters_.inner_iterations;
                ++counters_.endpos_queries;
                if (!dawg.end_pos_contains(u.state(), i + h))
                    return;
                ++counters_.endpos_queries;
                if (dawg.end_pos_contains(p.state(), i + h + k)) {
                    pj.insert(i + h + k);
                    ++counters_.insertions;
                }
            });
        }
    }
    return pj.contains(m);
}

inline PositionSet AutomatonMatcher::f_set(std::size_t j, std::size_t k) const
{
    if (!state_.holds(j))
        throw Error("position outside the retained window");
    const YConfig& cfg = state_.config(j);
    if (k == 0 || k > cfg.length)
        return PositionSet(pattern_.size() + 1);
    return dawg_->end_pos(dawg_->phi(cfg.state, k));
}

struct AutomatonResult
{
    MatchReport report;
    OpCounter counters;
};

inline AutomatonResult automaton_search(const Dawg& dawg, const Sequence& pattern, const Sequence& text)
{
    AutomatonResult out;
    if (pattern.size() > text.size())
        return out;
    AutomatonMatcher matcher(dawg, pattern);
    for (auto c : text)
        if (matcher.step(c))
            out.report.end_positions.push_back(matcher.position());
    out.counters = matcher.counters();
    return out;
}

inline AutomatonResult automaton_search(const Sequence& pattern, const Sequence& text)
{
    if (pattern.empty())
        throw Error("empty pattern");
    if (pattern.size() > text.size())
        return {};
    return automaton_search(Dawg(pattern), pattern, text);
}

} // namespace utd
