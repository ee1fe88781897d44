#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Result
{
    int status;
    std::string out;
};

Result run(const std::string& args)
{
    const std::string cmd = std::string(UTD_BINARY) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe))
        out.append(buf, got);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::filesystem::path write_temp(const std::string& name, const std::string& body)
{
    auto path = std::filesystem::temp_directory_path() / ("utd_cli_test_" + name);
    std::ofstream(path) << body;
    return path;
}

TEST(Cli, SearchExampleStrings)
{
    auto r = run("search --pattern gtgaccgtccag --text ggatcccagcgt --algo dawg");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "stdin\t12\n");
}

TEST(Cli, EnginesProduceIdenticalOutput)
{
    for (const char* args : {"--pattern abc --text xxbcaabcacbzz", "--pattern gtgaccgtccag --text ggatcccagcgtggatcccagcgt",
                             "--pattern aab --text abababaabbaab"}) {
        const auto dawg = run(std::string("search ") + args + " --algo dawg");
        EXPECT_EQ(run(std::string("search ") + args + " --algo dp").out, dawg.out);
        EXPECT_EQ(run(std::string("search ") + args + " --algo naive").out, dawg.out);
        EXPECT_FALSE(dawg.out.empty());
    }
}

TEST(Cli, FastaRecordsAreSearchedIndependently)
{
    auto fa = write_temp("two.fa", ">r1\nabc\n>r2\nxyz\n");
    auto r = run("search --pattern abc --fasta " + fa.string());
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "r1\t3\n");

    // "ab|c" across records must not match.
    auto split = write_temp("split.fa", ">a\nxab\n>b\ncxx\n");
    EXPECT_EQ(run("search --pattern abc --fasta " + split.string()).out, "");
}

TEST(Cli, PatternLongerThanEveryRecord)
{
    auto fa = write_temp("short.fa", ">s\nAC\n>t\nG\n");
    auto r = run("search --pattern acgtacgt --fasta " + fa.string());
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "");
}

TEST(Cli, JsonFormat)
{
    auto r = run("search --pattern ab --text abba --format json");
    ASSERT_EQ(r.status, 0);
    auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j.size(), 2u);
    EXPECT_EQ(j[0]["record"], "stdin");
    EXPECT_EQ(j[0]["end"], 2);
    EXPECT_EQ(j[1]["end"], 4);
}

TEST(Cli, TextAndPatternFiles)
{
    auto text = write_temp("text.txt", "ggatcc\ncagcgt\n");
    auto pat = write_temp("pat.fa", ">p\ngtgacc\ngtccag\n");
    auto r = run("search --pattern-file " + pat.string() + " --text-file " + text.string());
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, text.string() + "\t12\n");
}

TEST(Cli, Failures)
{
    EXPECT_EQ(run("search --pattern abc --text-file /nonexistent/file").status, 2);
    EXPECT_EQ(run("search --pattern '' --text abc").status, 2);
    EXPECT_EQ(run("search --pattern abcdefghijklm --text abc --algo naive").status, 2);
    EXPECT_EQ(run("search --pattern abcdefgh --text abc --algo naive --image-cap 5").status, 2);
    EXPECT_EQ(run("search --pattern abc --text abc --algo bogus").status, 2);
    auto headerless = write_temp("bad.fa", "acgt\n");
    EXPECT_EQ(run("search --pattern ac --fasta " + headerless.string()).status, 2);
    EXPECT_EQ(run("bench --m 16 --n 8 --sigma 4").status, 2);
    EXPECT_EQ(run("bench --m 16 --n 100 --sigma 1").status, 2);
}

TEST(Cli, BenchIsDeterministic)
{
    const std::string args = "bench --m 8,16 --n 5000 --sigma 4 --trials 3 --seed 42";
    auto a = run(args);
    auto b = run(args);
    ASSERT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out.substr(0, a.out.find('\n')),
              "m,n,sigma,seed,delta_steps,suffix_hops,inner_iterations,endpos_queries,normalized_cost");
    EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 7);
}

TEST(Cli, DawgDump)
{
    auto r = run("dawg --pattern ab");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "0 -> 1 [a]\n0 -> 2 [b]\n1 -> 2 [b]\n1 ~> 0\n2 ~> 0\n");
}

} // namespace
