#pragma once

#include <cctype>
#include <istream>
#include <string>
#include <vector>

#include "utd/seqcore.hpp"

namespace utd {

struct FastaRecord
{
    std::string id;
    std::string sequence;

    friend bool operator==(const FastaRecord&, const FastaRecord&) = default;
};

/// Reads FASTA: '>' starts a record whose id is the first header token;
/// sequence lines are concatenated with whitespace dropped and letters
/// uppercased. Blank lines are ignored.
inline std::vector<FastaRecord> parse_fasta(std::istream& in)
{
    std::vector<FastaRecord> records;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        if (line.front() == '>') {
            std::size_t b = 1;
            while (b < line.size() && std::isspace(static_cast<unsigned char>(line[b])))
                ++b;
            std::size_t e = b;
            while (e < line.size() && !std::isspace(static_cast<unsigned char>(line[e])))
                ++e;
            if (b == e)
                throw Error("empty FASTA record id");
            records.push_back({line.substr(b, e - b), {}});
            continue;
        }
        bool blank = true;
        for (char ch : line)
            blank = blank && std::isspace(static_cast<unsigned char>(ch));
        if (blank)
            continue;
        if (records.empty())
            throw Error("missing FASTA header");
        auto& seq = records.back().sequence;
        for (char ch : line)
            if (!std::isspace(static_cast<unsigned char>(ch)))
                seq.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
    }
    return records;
}

} // namespace utd
