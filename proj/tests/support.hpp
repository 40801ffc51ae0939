#pragma once

// Shared helpers for the unit and acceptance suites.

#include <array>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <sys/wait.h>

#include "halq/corpus.hpp"

namespace testing {

// Independent co-occurrence oracle: enumerates every ordered pair (i, j)
// with j <= i and i - j <= window - 2, summing window - 1 - (i - j).
inline std::map<std::pair<std::string, std::string>, std::uint64_t>
brute_force_cooccurrence(const std::vector<std::string>& stems, int window) {
    std::map<std::pair<std::string, std::string>, std::uint64_t> counts;
    for (std::size_t i = 0; i < stems.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (i - j <= static_cast<std::size_t>(window - 2))
                counts[{stems[i], stems[j]}] += static_cast<std::uint64_t>(window - 1) - (i - j);
    return counts;
}

inline std::vector<std::string> random_doc(std::mt19937& rng, int max_len, int alphabet) {
    std::uniform_int_distribution<int> len_dist(0, max_len);
    std::uniform_int_distribution<int> sym_dist(0, alphabet - 1);
    std::vector<std::string> stems(len_dist(rng));
    for (auto& s : stems) s = std::string(1, static_cast<char>('a' + sym_dist(rng)));
    return stems;
}

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

// Runs a shell command capturing stdout (add "2>&1" to capture stderr too).
inline CommandResult run_command(const std::string& cmd) {
    CommandResult result;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return result;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, n);
    const int status = ::pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (!line.empty() && line.back() == ',') fields.push_back("");
        rows.push_back(std::move(fields));
    }
    return rows;
}

inline const std::vector<halq::RawDocument>& bundled_corpus() {
    static const std::vector<halq::RawDocument> corpus = halq::load_corpus(HALQ_CORPUS_FILE);
    return corpus;
}

inline const halq::RawDocument& doc_by_id(const std::string& id) {
    for (const auto& d : bundled_corpus())
        if (d.id == id) return d;
    throw std::runtime_error("missing bundled document " + id);
}

}  // namespace testing
