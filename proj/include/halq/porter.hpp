#pragma once

#include <string>
#include <string_view>

namespace halq {

/// Porter suffix-stripping stemmer, matching the revised rule set used by
/// NLTK's PorterStemmer: irregular-form table, words of length <= 2 left
/// untouched, "ies"/"ied" handling for 4-letter words, and y->i only when
/// the y follows a consonant that is not the first letter.
///
/// Expects a lowercase token; output is deterministic.
std::string porter_stem(std::string_view word);

}  // namespace halq
