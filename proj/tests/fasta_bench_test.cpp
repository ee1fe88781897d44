#include <gtest/gtest.h>

#include <sstream>

#include "utd/bench.hpp"
#include "utd/fasta.hpp"

namespace utd {
namespace {

std::vector<FastaRecord> parse(const std::string& s)
{
    std::istringstream in(s);
    return parse_fasta(in);
}

TEST(Fasta, ConcatenatesAndUppercases)
{
    EXPECT_EQ(parse(">r1\nacg\nt\n"), (std::vector<FastaRecord>{{"r1", "ACGT"}}));
}

TEST(Fasta, EmptyRecordsAllowed)
{
    EXPECT_EQ(parse(">a\n>b\nGG\n"), (std::vector<FastaRecord>{{"a", ""}, {"b", "GG"}}));
}

TEST(Fasta, MissingHeader)
{
    EXPECT_THROW(parse("acgt"), Error);
}

TEST(Fasta, IdIsFirstTokenAndBlankLinesAreSkipped)
{
    EXPECT_EQ(parse("\n>chr1 some description\r\nAC GT\r\n\n  \nnn\n"),
              (std::vector<FastaRecord>{{"chr1", "ACGTNN"}}));
    EXPECT_THROW(parse(">\nACGT\n"), Error);
}

TEST(Bench, RowCountAndOrder)
{
    BenchParams p{{16, 64, 256}, 2000, 4, 5, 42};
    auto rows = run_bench(p);
    ASSERT_EQ(rows.size(), 15u);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        EXPECT_EQ(rows[r].m, p.m_list[r / 5]);
        EXPECT_EQ(rows[r].n, 2000u);
        EXPECT_EQ(rows[r].sigma, 4u);
    }
}

TEST(Bench, DeterministicCsv)
{
    BenchParams p{{8, 32}, 3000, 4, 3, 7};
    std::ostringstream a, b;
    write_csv(a, run_bench(p));
    write_csv(b, run_bench(p));
    EXPECT_EQ(a.str(), b.str());
    EXPECT_EQ(a.str().substr(0, a.str().find('\n')), kBenchCsvHeader);

    p.seed = 8;
    std::ostringstream c;
    write_csv(c, run_bench(p));
    EXPECT_NE(a.str(), c.str());
}

TEST(Bench, TrialsAreIndependentOfTheirNeighbours)
{
    const auto alone = bench_trial(32, 3000, 4, 99, 2);
    const auto rows = run_bench({{16, 32}, 3000, 4, 3, 99});
    EXPECT_EQ(rows[5].counters, alone.counters);
}

TEST(Bench, NormalizedCost)
{
    EXPECT_DOUBLE_EQ(normalized_cost(400, 100, 16, 4), 1.0);
    EXPECT_DOUBLE_EQ(normalized_cost(1600, 100, 256, 4), 1.0);
}

TEST(Bench, RejectsBadParameters)
{
    EXPECT_THROW(run_bench({{16}, 100, 1, 1, 0}), Error);
    EXPECT_THROW(run_bench({{16}, 10, 4, 1, 0}), Error);
    EXPECT_THROW(run_bench({{16}, 100, 4, 0, 0}), Error);
    EXPECT_THROW(run_bench({{}, 100, 4, 1, 0}), Error);
    EXPECT_THROW(run_bench({{0}, 100, 4, 1, 0}), Error);
}

} // namespace
} // namespace utd
