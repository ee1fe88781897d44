#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <future>
#include <ostream>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "utd/dawg.hpp"
#include "utd/dawg_matcher.hpp"
#include "utd/seqcore.hpp"

namespace utd {

struct BenchParams
{
    std::vector<std::size_t> m_list;
    std::size_t n = 0;
    std::size_t sigma = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
};

struct BenchRow
{
    std::size_t m = 0;
    std::size_t n = 0;
    std::size_t sigma = 0;
    std::uint64_t seed = 0;
    OpCounter counters;
    double normalized_cost = 0.0; ///< inner_iterations / (n * log_sigma(m)^2)
};

inline constexpr const char* kBenchCsvHeader =
    "m,n,sigma,seed,delta_steps,suffix_hops,inner_iterations,endpos_queries,normalized_cost";

/// Generator for trial t at pattern length m: mt19937_64 seeded through
/// std::seed_seq with the 32-bit words (seed_lo, seed_hi, m, t). Symbols are
/// drawn as next() % sigma.
inline std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t m, std::size_t trial)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(trial)};
    return std::mt19937_64(seq);
}

inline Sequence random_sequence(std::mt19937_64& rng, std::size_t length, std::size_t sigma)
{
    std::vector<Symbol> codes(length);
    for (auto& c : codes)
        c = static_cast<Symbol>(rng() % sigma);
    return Sequence(std::move(codes), sigma);
}

inline double normalized_cost(std::uint64_t inner_iterations, std::size_t n, std::size_t m, std::size_t sigma)
{
    const double lg = std::log(static_cast<double>(m)) / std::log(static_cast<double>(sigma));
    return static_cast<double>(inner_iterations) / (static_cast<double>(n) * lg * lg);
}

inline BenchRow bench_trial(std::size_t m, std::size_t n, std::size_t sigma, std::uint64_t seed, std::size_t trial)
{
    auto rng = trial_rng(seed, m, trial);
    const Sequence pattern = random_sequence(rng, m, sigma);
    const Sequence text = random_sequence(rng, n, sigma);
    const Dawg dawg(pattern);

    BenchRow row{m, n, sigma, seed, {}, 0.0};
    row.counters = automaton_search(dawg, pattern, text).counters;
    row.normalized_cost = normalized_cost(row.counters.inner_iterations, n, m, sigma);
    return row;
}

inline void validate(const BenchParams& p)
{
    if (p.sigma < 2)
        throw Error("sigma must be at least 2");
    if (p.sigma > 0xfffe)
        throw Error("sigma too large");
    if (p.m_list.empty())
        throw Error("empty m list");
    if (p.trials == 0)
        throw Error("trials must be positive");
    for (auto m : p.m_list) {
        if (m == 0)
            throw Error("pattern length must be positive");
        if (m > p.n)
            throw Error("n must be at least max(m)");
    }
}

/// One row per (m, trial), ordered by m-list order then trial. Trials run on
/// a small worker pool; each derives its generator from (seed, m, trial)
/// alone, so the rows do not depend on scheduling.
inline std::vector<BenchRow> run_bench(const BenchParams& p)
{
    validate(p);
    struct Job
    {
        std::size_t m, trial;
    };
    std::vector<Job> jobs;
    for (auto m : p.m_list)
        for (std::size_t t = 0; t < p.trials; ++t)
            jobs.push_back({m, t});

    std::vector<BenchRow> rows(jobs.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        for (std::size_t idx; (idx = cursor.fetch_add(1)) < jobs.size();)
            rows[idx] = bench_trial(jobs[idx].m, p.n, p.sigma, p.seed, jobs[idx].trial);
    };
    const std::size_t n_workers =
        std::min<std::size_t>(jobs.size(), std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::future<void>> pool;
    for (std::size_t w = 0; w < n_workers; ++w)
        pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool)
        f.get();
    return rows;
}

inline void write_csv(std::ostream& os, const std::vector<BenchRow>& rows)
{
    os << kBenchCsvHeader << '\n';
    char cost[64];
    for (const auto& r : rows) {
        std::snprintf(cost, sizeof cost, "%.6f", r.normalized_cost);
        os << r.m << ',' << r.n << ',' << r.sigma << ',' << r.seed << ',' << r.counters.delta_steps << ','
           << r.counters.suffix_hops << ',' << r.counters.inner_iterations << ',' << r.counters.endpos_queries << ','
           << cost << '\n';
    }
}

} // namespace utd
