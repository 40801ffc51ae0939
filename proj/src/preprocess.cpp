#include "halq/preprocess.hpp"

#include <cctype>

#include "halq/errors.hpp"
#include "halq/porter.hpp"

namespace halq {

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string cur;
    std::size_t i = 0;
    while (i < text.size()) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 0x80) {
            if (std::isalnum(c)) {
                cur.push_back(static_cast<char>(std::tolower(c)));
            } else if (!cur.empty()) {
                tokens.push_back(std::move(cur));
                cur.clear();
            }
            ++i;
        } else {
            // multibyte UTF-8 sequence, copied through verbatim
            std::size_t len = 1;
            if ((c & 0xE0) == 0xC0) len = 2;
            else if ((c & 0xF0) == 0xE0) len = 3;
            else if ((c & 0xF8) == 0xF0) len = 4;
            if (i + len > text.size()) len = text.size() - i;
            cur.append(text.substr(i, len));
            i += len;
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    return tokens;
}

std::string stem_token(const std::string& token, const PreprocessConfig& cfg) {
    std::string stem = cfg.stemmer == Stemmer::porter ? porter_stem(token) : token;
    if (auto it = cfg.keyword_equivalence.find(stem); it != cfg.keyword_equivalence.end())
        return it->second;
    return stem;
}

std::vector<std::string> preprocess_text(std::string_view text, const PreprocessConfig& cfg) {
    if (!cfg.valid())
        throw RangeError("stopword removal enabled with an empty lexicon");
    std::vector<std::string> stems;
    for (std::string& token : tokenize(text)) {
        if (cfg.stopword_removal && cfg.stopword_lexicon.contains(token)) continue;
        stems.push_back(stem_token(token, cfg));
    }
    return stems;
}

std::vector<std::string> preprocess(const RawDocument& doc, const PreprocessConfig& cfg) {
    return preprocess_text(doc.text, cfg);
}

}  // namespace halq
