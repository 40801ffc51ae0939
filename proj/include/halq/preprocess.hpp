#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "halq/corpus.hpp"

namespace halq {

enum class Stemmer { porter, none };

struct PreprocessConfig {
    Stemmer stemmer = Stemmer::porter;
    bool stopword_removal = false;
    std::unordered_set<std::string> stopword_lexicon;
    // optional stem conflation applied after stemming, e.g. woman -> women
    std::unordered_map<std::string, std::string> keyword_equivalence;

    bool valid() const { return !stopword_removal || !stopword_lexicon.empty(); }
};

/// Splits on every non-alphanumeric ASCII character and lowercases.
/// Digit-only tokens are kept; apostrophes split ("That's" -> "that", "s").
/// Bytes outside ASCII are treated as word characters and copied through.
std::vector<std::string> tokenize(std::string_view text);

/// Stems one lowercase token under the config (stemmer + equivalence map).
std::string stem_token(const std::string& token, const PreprocessConfig& cfg);

/// tokenize -> optional stopword removal -> stem -> equivalence substitution.
std::vector<std::string> preprocess_text(std::string_view text, const PreprocessConfig& cfg);
std::vector<std::string> preprocess(const RawDocument& doc, const PreprocessConfig& cfg);

}  // namespace halq
