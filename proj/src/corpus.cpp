#include "halq/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <unordered_set>

#include "halq/errors.hpp"
#include "json.hpp"

namespace halq {

const char* to_string(Label label) {
    return label == Label::hate ? "hate" : "nohate";
}

Label label_from_string(std::string_view s) {
    if (s == "hate") return Label::hate;
    if (s == "nohate") return Label::nohate;
    throw IoError("unknown label '" + std::string(s) + "' (expected 'hate' or 'nohate')");
}

std::vector<RawDocument> load_corpus(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open corpus file '" + path.string() + "'");
    return load_corpus(in, path.string());
}

std::vector<RawDocument> load_corpus(std::istream& in, const std::string& name) {
    std::vector<RawDocument> docs;
    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (lineno == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);  // UTF-8 BOM
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const std::string where = name + ":" + std::to_string(lineno);
        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw IoError(where + ": malformed JSON line: " + e.what());
        }
        if (!obj.is_object() || !obj.contains("id") || !obj.contains("label") || !obj.contains("text"))
            throw IoError(where + ": document object needs string fields id, label, text");
        RawDocument doc;
        try {
            doc.id = obj.at("id").get<std::string>();
            doc.label = label_from_string(obj.at("label").get<std::string>());
            doc.text = obj.at("text").get<std::string>();
        } catch (const nlohmann::json::exception& e) {
            throw IoError(where + ": " + e.what());
        } catch (const IoError& e) {
            throw IoError(where + ": " + e.what());
        }
        if (doc.id.empty()) throw IoError(where + ": empty document id");
        if (!seen.insert(doc.id).second)
            throw IoError(where + ": duplicate document id '" + doc.id + "'");
        docs.push_back(std::move(doc));
    }
    return docs;
}

std::unordered_set<std::string> load_stopwords(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open stopword file '" + path.string() + "'");
    std::unordered_set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        // trim
        auto b = line.find_first_not_of(" \t\r");
        auto e = line.find_last_not_of(" \t\r");
        if (b == std::string::npos) continue;
        std::string word = line.substr(b, e - b + 1);
        std::transform(word.begin(), word.end(), word.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        words.insert(std::move(word));
    }
    return words;
}

}  // namespace halq
