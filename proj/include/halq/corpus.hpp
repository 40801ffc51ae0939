#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace halq {

enum class Label { hate, nohate };

const char* to_string(Label label);
Label label_from_string(std::string_view s);

/// One raw corpus entry as stored in the JSON-Lines file.
struct RawDocument {
    std::string id;
    Label label = Label::nohate;
    std::string text;
};

/// Loads a JSON-Lines corpus: one {"id", "label", "text"} object per line.
/// Blank lines are skipped. Throws IoError naming the offending line on
/// malformed JSON, missing fields, bad labels, or duplicate/empty ids.
std::vector<RawDocument> load_corpus(const std::filesystem::path& path);
std::vector<RawDocument> load_corpus(std::istream& in, const std::string& name);

/// Loads a stopword lexicon: one lowercase word per line, '#' comments allowed.
std::unordered_set<std::string> load_stopwords(const std::filesystem::path& path);

}  // namespace halq
