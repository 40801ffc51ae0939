#include "halq/query.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "halq/errors.hpp"

namespace halq {
namespace {

void sort_unique(std::vector<std::string>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

QueryAst parse_query(std::string_view src, const PreprocessConfig& cfg) {
    QueryAst ast;
    std::size_t i = 0;
    const auto skip_spaces = [&] {
        while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
    };

    skip_spaces();
    if (i == src.size()) throw QueryParseError("empty query", 0);

    bool negative = false;  // sign of the next term; the first term is positive
    while (true) {
        const std::size_t term_pos = i;
        std::string term;
        while (i < src.size() && src[i] != '*' && src[i] != '-' &&
               !std::isspace(static_cast<unsigned char>(src[i]))) {
            unsigned char c = static_cast<unsigned char>(src[i]);
            if (!std::isalnum(c))
                throw QueryParseError("invalid character in query term", i);
            term.push_back(static_cast<char>(std::tolower(c)));
            ++i;
        }
        if (term.empty()) throw QueryParseError("expected a term", term_pos);

        std::string stem = stem_token(term, cfg);
        auto& dest = negative ? ast.negatives : ast.positives;
        auto& other = negative ? ast.positives : ast.negatives;
        if (std::find(other.begin(), other.end(), stem) != other.end())
            throw QueryParseError("term '" + term + "' used both positively and negatively",
                                  term_pos);
        dest.push_back(std::move(stem));

        skip_spaces();
        if (i == src.size()) break;
        if (src[i] != '*' && src[i] != '-')
            throw QueryParseError("expected '*' or '-'", i);
        negative = src[i] == '-';
        ++i;
        skip_spaces();
        if (i == src.size()) throw QueryParseError("dangling operator", i);
    }

    sort_unique(ast.positives);
    sort_unique(ast.negatives);
    return ast;
}

bool eval_query(const QueryAst& query, std::span<const std::string> stems) {
    std::unordered_set<std::string_view> present(stems.begin(), stems.end());
    for (const auto& p : query.positives)
        if (!present.contains(p)) return false;
    for (const auto& n : query.negatives)
        if (present.contains(n)) return false;
    return true;
}

std::vector<RawDocument> select_subcorpus(std::span<const RawDocument> corpus,
                                          const QueryAst& query, const PreprocessConfig& cfg) {
    std::vector<RawDocument> selected;
    for (const RawDocument& doc : corpus) {
        const auto stems = preprocess(doc, cfg);
        if (eval_query(query, stems)) selected.push_back(doc);
    }
    return selected;
}

}  // namespace halq
