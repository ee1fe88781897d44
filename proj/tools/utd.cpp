// utd: approximate search under non-overlapping adjacent translocations.
//
//   utd search --pattern <str>|--pattern-file <path>
//              (--text <str>|--text-file <path>|--fasta <path>)
//              [--algo naive|dp|dawg] [--format tsv|json]
//   utd bench --m 16,64,256 --n 100000 --sigma 4 --trials 5 --seed 42
//   utd dawg --pattern <str>

#include <cctype>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "utd/utd.hpp"

namespace {

constexpr int kExitFailure = 2;

std::string upper(std::string s)
{
    for (auto& ch : s)
        ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    return s;
}

std::string strip_whitespace(const std::string& s)
{
    std::string out;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            out.push_back(ch);
    return out;
}

std::unique_ptr<std::istream> open_input(const std::string& path)
{
    if (path == "-") {
        auto in = std::make_unique<std::istringstream>();
        in->str(std::string(std::istreambuf_iterator<char>(std::cin), {}));
        return in;
    }
    auto in = std::make_unique<std::ifstream>(path, std::ios::binary);
    if (!*in)
        throw utd::Error("cannot open " + path);
    return in;
}

/// A pattern file holds either a FASTA record (its first record is used) or
/// raw residues with whitespace ignored.
std::string read_pattern_file(const std::string& path)
{
    auto in = open_input(path);
    std::string raw(std::istreambuf_iterator<char>(*in), {});
    auto first = raw.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && raw[first] == '>') {
        std::istringstream fa(raw);
        auto records = utd::parse_fasta(fa);
        if (records.empty())
            throw utd::Error("empty pattern");
        return records.front().sequence;
    }
    return upper(strip_whitespace(raw));
}

enum class Algo { naive, dp, dawg };

struct SearchOptions
{
    std::string pattern;
    std::string pattern_file;
    std::string text;
    std::string text_file;
    std::string fasta;
    std::string algo = "dawg";
    std::string format = "tsv";
    std::size_t naive_max_m = 12;
    std::size_t image_cap = utd::kDefaultImageCap;
};

struct Hit
{
    std::string record;
    std::size_t end;
};

/// Runs one engine over a stream of raw text characters; whitespace is
/// skipped and letters are uppercased, matching the FASTA normalisation.
class Searcher
{
public:
    Searcher(const std::string& pattern, Algo algo, const SearchOptions& opt)
        : alphabet_(utd::infer_alphabet(pattern)), pattern_(utd::encode(pattern, alphabet_)), algo_(algo), opt_(opt)
    {
        if (pattern_.empty())
            throw utd::Error("empty pattern");
        if (algo_ == Algo::naive) {
            if (pattern_.size() > opt_.naive_max_m)
                throw utd::Error("pattern too long for the naive engine (max " + std::to_string(opt_.naive_max_m) + ")");
            images_ = utd::enumerate_images(pattern_, opt_.image_cap);
        }
        if (algo_ == Algo::dawg)
            dawg_.emplace(pattern_);
    }

    std::vector<std::size_t> run(std::istream& in) const
    {
        std::vector<std::size_t> ends;
        switch (algo_) {
        case Algo::dawg: {
            utd::AutomatonMatcher matcher(*dawg_, pattern_);
            each_symbol(in, [&](utd::Symbol c) {
                if (matcher.step(c))
                    ends.push_back(matcher.position());
            });
            break;
        }
        case Algo::dp: {
            utd::DpMatcher matcher(pattern_);
            each_symbol(in, [&](utd::Symbol c) {
                if (matcher.feed(c))
                    ends.push_back(matcher.position());
            });
            break;
        }
        case Algo::naive: {
            const std::size_t m = pattern_.size();
            std::vector<utd::Symbol> window;
            std::size_t j = 0;
            each_symbol(in, [&](utd::Symbol c) {
                ++j;
                window.push_back(c);
                if (window.size() > m)
                    window.erase(window.begin());
                if (window.size() == m && images_.contains(window))
                    ends.push_back(j);
            });
            break;
        }
        }
        return ends;
    }

private:
    template <typename Fn>
    void each_symbol(std::istream& in, Fn&& fn) const
    {
        char buf[1 << 16];
        while (in.read(buf, sizeof buf) || in.gcount() > 0) {
            const auto got = static_cast<std::size_t>(in.gcount());
            for (std::size_t t = 0; t < got; ++t) {
                const auto ch = static_cast<unsigned char>(buf[t]);
                if (std::isspace(ch))
                    continue;
                fn(alphabet_.code(static_cast<char>(std::toupper(ch))));
            }
        }
    }

    utd::Alphabet alphabet_;
    utd::Sequence pattern_;
    Algo algo_;
    const SearchOptions& opt_;
    std::optional<utd::Dawg> dawg_;
    utd::ImageSet images_;
};

void write_hits(const std::vector<Hit>& hits, const std::string& format)
{
    if (format == "json") {
        auto arr = nlohmann::json::array();
        for (const auto& h : hits)
            arr.push_back({{"record", h.record}, {"end", h.end}});
        std::cout << arr.dump() << '\n';
        return;
    }
    for (const auto& h : hits)
        std::cout << h.record << '\t' << h.end << '\n';
}

int cmd_search(const SearchOptions& opt)
{
    const std::string pattern = opt.pattern_file.empty() ? upper(opt.pattern) : read_pattern_file(opt.pattern_file);
    const Algo algo = opt.algo == "naive" ? Algo::naive : opt.algo == "dp" ? Algo::dp : Algo::dawg;
    const Searcher searcher(pattern, algo, opt);

    std::vector<Hit> hits;
    auto collect = [&](const std::string& record, std::istream& in) {
        for (auto j : searcher.run(in))
            hits.push_back({record, j});
    };

    if (!opt.fasta.empty()) {
        auto in = open_input(opt.fasta);
        for (const auto& rec : utd::parse_fasta(*in)) {
            std::istringstream seq(rec.sequence);
            collect(rec.id, seq);
        }
    } else if (!opt.text_file.empty()) {
        auto in = open_input(opt.text_file);
        collect(opt.text_file == "-" ? "stdin" : opt.text_file, *in);
    } else {
        std::istringstream in(opt.text);
        collect("stdin", in);
    }
    write_hits(hits, opt.format);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Approximate pattern matching under non-overlapping adjacent translocations"};
    app.require_subcommand(1);

    SearchOptions sopt;
    auto* search = app.add_subcommand("search", "Report the end positions of approximate matches");
    auto* pat = search->add_option("--pattern", sopt.pattern, "Pattern string");
    auto* pat_file = search->add_option("--pattern-file", sopt.pattern_file, "File holding the pattern");
    pat->excludes(pat_file);
    pat_file->excludes(pat);
    auto* text = search->add_option("--text", sopt.text, "Text string");
    auto* text_file = search->add_option("--text-file", sopt.text_file, "Plain text file ('-' for stdin)");
    auto* fasta = search->add_option("--fasta", sopt.fasta, "FASTA file; each record is searched on its own");
    text->excludes(text_file)->excludes(fasta);
    text_file->excludes(text)->excludes(fasta);
    fasta->excludes(text)->excludes(text_file);
    search->add_option("--algo", sopt.algo, "Engine")->check(CLI::IsMember({"naive", "dp", "dawg"}));
    search->add_option("--format", sopt.format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
    search->add_option("--naive-max-m", sopt.naive_max_m, "Longest pattern the naive engine accepts");
    search->add_option("--image-cap", sopt.image_cap, "Distinct image limit for the naive engine");

    utd::BenchParams bopt{{16, 64, 256}, 100000, 4, 5, 42};
    auto* bench = app.add_subcommand("bench", "Operation-count benchmark on uniform random strings (CSV)");
    bench->add_option("--m", bopt.m_list, "Pattern lengths")->delimiter(',');
    bench->add_option("--n", bopt.n, "Text length");
    bench->add_option("--sigma", bopt.sigma, "Alphabet size");
    bench->add_option("--trials", bopt.trials, "Trials per pattern length");
    bench->add_option("--seed", bopt.seed, "Base seed");

    std::string dump_pattern;
    auto* dawg = app.add_subcommand("dawg", "Print the automaton of a pattern as an edge list");
    dawg->add_option("--pattern", dump_pattern, "Pattern string")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitFailure;
    }

    try {
        if (search->parsed()) {
            if (sopt.pattern.empty() && sopt.pattern_file.empty())
                throw utd::Error("empty pattern");
            if (sopt.text_file.empty() && sopt.fasta.empty() && text->count() == 0)
                throw utd::Error("one of --text, --text-file, --fasta is required");
            return cmd_search(sopt);
        }
        if (bench->parsed()) {
            auto rows = utd::run_bench(bopt);
            utd::write_csv(std::cout, rows);
            return 0;
        }
        if (dawg->parsed()) {
            auto a = utd::infer_alphabet(dump_pattern);
            utd::dump(std::cout, utd::Dawg(utd::encode(dump_pattern, a)), &a);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "utd: error: " << e.what() << '\n';
        return kExitFailure;
    }
    return 0;
}
