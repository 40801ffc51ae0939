#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "halq/corpus.hpp"
#include "halq/preprocess.hpp"

namespace halq {

/// Conjunctive keyword query with negated terms: a*b-c means
/// "a and b occur, c does not". Terms are stored as stems.
struct QueryAst {
    std::vector<std::string> positives;  // sorted, distinct, nonempty
    std::vector<std::string> negatives;  // sorted, distinct
};

/// Grammar: query := term (('*'|'-') term)*. The leading term is positive.
/// Terms are stemmed with cfg before storage. Throws QueryParseError (with
/// byte position) on empty input, dangling operators, malformed terms, or a
/// term appearing both positively and negatively.
QueryAst parse_query(std::string_view src, const PreprocessConfig& cfg);

/// True iff every positive stem occurs in stems and no negative stem does.
bool eval_query(const QueryAst& query, std::span<const std::string> stems);

/// Stable-ordered filter of the corpus by eval_query.
std::vector<RawDocument> select_subcorpus(std::span<const RawDocument> corpus,
                                          const QueryAst& query, const PreprocessConfig& cfg);

}  // namespace halq
