#include "halq/porter.hpp"

#include <array>
#include <functional>
#include <initializer_list>
#include <unordered_map>

namespace halq {
namespace {

bool is_vowel_letter(char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// 'y' counts as a consonant at position 0 and after a vowel.
bool is_consonant(const std::string& w, std::size_t i) {
    char c = w[i];
    if (is_vowel_letter(c)) return false;
    if (c == 'y') return i == 0 ? true : !is_consonant(w, i - 1);
    return true;
}

// m: the number of vowel-consonant sequences in the stem's CV form.
int measure(const std::string& stem) {
    int m = 0;
    bool prev_consonant = true;
    bool started = false;
    for (std::size_t i = 0; i < stem.size(); ++i) {
        bool cons = is_consonant(stem, i);
        if (started && !prev_consonant && cons) ++m;
        prev_consonant = cons;
        started = true;
    }
    return m;
}

bool has_positive_measure(const std::string& stem) { return measure(stem) > 0; }

bool contains_vowel(const std::string& stem) {
    for (std::size_t i = 0; i < stem.size(); ++i)
        if (!is_consonant(stem, i)) return true;
    return false;
}

bool ends_double_consonant(const std::string& w) {
    return w.size() >= 2 && w[w.size() - 1] == w[w.size() - 2] &&
           is_consonant(w, w.size() - 1);
}

// consonant-vowel-consonant ending where the final consonant is not w/x/y;
// two-letter vowel-consonant words ("us", "on") also qualify.
bool ends_cvc(const std::string& w) {
    std::size_t n = w.size();
    if (n >= 3 && is_consonant(w, n - 3) && !is_consonant(w, n - 2) &&
        is_consonant(w, n - 1) && w[n - 1] != 'w' && w[n - 1] != 'x' && w[n - 1] != 'y')
        return true;
    return n == 2 && !is_consonant(w, 0) && is_consonant(w, 1);
}

bool ends_with(const std::string& w, std::string_view suffix) {
    return w.size() >= suffix.size() &&
           w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string chop(const std::string& w, std::size_t n) { return w.substr(0, w.size() - n); }

struct Rule {
    std::string_view suffix;       // "*d" = double consonant
    std::string_view replacement;
    std::function<bool(const std::string&)> condition;  // on the stem, null = always
};

// First matching suffix wins; a failed condition stops the whole list.
std::string apply_rules(const std::string& w, std::initializer_list<Rule> rules) {
    for (const Rule& rule : rules) {
        if (rule.suffix == "*d") {
            if (!ends_double_consonant(w)) continue;
            std::string stem = chop(w, 2);
            if (!rule.condition || rule.condition(stem)) return stem + std::string(rule.replacement);
            return w;
        }
        if (ends_with(w, rule.suffix)) {
            std::string stem = chop(w, rule.suffix.size());
            if (!rule.condition || rule.condition(stem)) return stem + std::string(rule.replacement);
            return w;
        }
    }
    return w;
}

std::string step1a(const std::string& w) {
    if (ends_with(w, "ies") && w.size() == 4) return chop(w, 3) + "ie";
    return apply_rules(w, {
        {"sses", "ss", nullptr},
        {"ies", "i", nullptr},
        {"ss", "ss", nullptr},
        {"s", "", nullptr},
    });
}

std::string step1b(const std::string& w) {
    if (ends_with(w, "ied")) return w.size() == 4 ? chop(w, 3) + "ie" : chop(w, 3) + "i";

    if (ends_with(w, "eed")) {
        std::string stem = chop(w, 3);
        return measure(stem) > 0 ? stem + "ee" : w;
    }

    std::string stem;
    bool stripped = false;
    for (std::string_view suffix : {"ed", "ing"}) {
        if (ends_with(w, suffix)) {
            stem = chop(w, suffix.size());
            if (contains_vowel(stem)) stripped = true;
            break;
        }
    }
    if (!stripped) return w;

    const char last = stem.back();
    return apply_rules(stem, {
        {"at", "ate", nullptr},
        {"bl", "ble", nullptr},
        {"iz", "ize", nullptr},
        {"*d", {&last, 1}, [last](const std::string&) { return last != 'l' && last != 's' && last != 'z'; }},
        {"", "e", [](const std::string& s) { return measure(s) == 1 && ends_cvc(s); }},
    });
}

std::string step1c(const std::string& w) {
    // y -> i only after a consonant that is not the word's first letter
    return apply_rules(w, {
        {"y", "i", [](const std::string& s) { return s.size() > 1 && is_consonant(s, s.size() - 1); }},
    });
}

std::string step2(const std::string& w) {
    if (ends_with(w, "alli") && has_positive_measure(chop(w, 4)))
        return step2(chop(w, 4) + "al");
    // keep the l with the stem so "geologi" -> "geolog"
    if (ends_with(w, "logi") && has_positive_measure(chop(w, 3)))
        return chop(w, 3) + "og";

    return apply_rules(w, {
        {"ational", "ate", has_positive_measure},
        {"tional", "tion", has_positive_measure},
        {"enci", "ence", has_positive_measure},
        {"anci", "ance", has_positive_measure},
        {"izer", "ize", has_positive_measure},
        {"bli", "ble", has_positive_measure},
        {"alli", "al", has_positive_measure},
        {"entli", "ent", has_positive_measure},
        {"eli", "e", has_positive_measure},
        {"ousli", "ous", has_positive_measure},
        {"ization", "ize", has_positive_measure},
        {"ation", "ate", has_positive_measure},
        {"ator", "ate", has_positive_measure},
        {"alism", "al", has_positive_measure},
        {"iveness", "ive", has_positive_measure},
        {"fulness", "ful", has_positive_measure},
        {"ousness", "ous", has_positive_measure},
        {"aliti", "al", has_positive_measure},
        {"iviti", "ive", has_positive_measure},
        {"biliti", "ble", has_positive_measure},
        {"fulli", "ful", has_positive_measure},
    });
}

std::string step3(const std::string& w) {
    return apply_rules(w, {
        {"icate", "ic", has_positive_measure},
        {"ative", "", has_positive_measure},
        {"alize", "al", has_positive_measure},
        {"iciti", "ic", has_positive_measure},
        {"ical", "ic", has_positive_measure},
        {"ful", "", has_positive_measure},
        {"ness", "", has_positive_measure},
    });
}

std::string step4(const std::string& w) {
    auto m_gt_1 = [](const std::string& s) { return measure(s) > 1; };
    return apply_rules(w, {
        {"al", "", m_gt_1},
        {"ance", "", m_gt_1},
        {"ence", "", m_gt_1},
        {"er", "", m_gt_1},
        {"ic", "", m_gt_1},
        {"able", "", m_gt_1},
        {"ible", "", m_gt_1},
        {"ant", "", m_gt_1},
        {"ement", "", m_gt_1},
        {"ment", "", m_gt_1},
        {"ent", "", m_gt_1},
        {"ion", "", [](const std::string& s) {
             return !s.empty() && measure(s) > 1 && (s.back() == 's' || s.back() == 't');
         }},
        {"ou", "", m_gt_1},
        {"ism", "", m_gt_1},
        {"ate", "", m_gt_1},
        {"iti", "", m_gt_1},
        {"ous", "", m_gt_1},
        {"ive", "", m_gt_1},
        {"ize", "", m_gt_1},
    });
}

std::string step5a(const std::string& w) {
    if (ends_with(w, "e")) {
        std::string stem = chop(w, 1);
        if (measure(stem) > 1) return stem;
        if (measure(stem) == 1 && !ends_cvc(stem)) return stem;
    }
    return w;
}

std::string step5b(const std::string& w) {
    if (ends_with(w, "ll") && measure(chop(w, 1)) > 1) return chop(w, 1);
    return w;
}

const std::unordered_map<std::string_view, std::string_view>& irregular_forms() {
    static const std::unordered_map<std::string_view, std::string_view> table = {
        {"skies", "sky"},     {"sky", "sky"},
        {"dying", "die"},     {"lying", "lie"},     {"tying", "tie"},
        {"news", "news"},
        {"innings", "inning"}, {"inning", "inning"},
        {"outings", "outing"}, {"outing", "outing"},
        {"cannings", "canning"}, {"canning", "canning"},
        {"howe", "howe"},
        {"proceed", "proceed"}, {"exceed", "exceed"}, {"succeed", "succeed"},
    };
    return table;
}

}  // namespace

std::string porter_stem(std::string_view word) {
    if (auto it = irregular_forms().find(word); it != irregular_forms().end())
        return std::string(it->second);
    std::string w(word);
    if (w.size() <= 2) return w;
    w = step1a(w);
    w = step1b(w);
    w = step1c(w);
    w = step2(w);
    w = step3(w);
    w = step4(w);
    w = step5a(w);
    w = step5b(w);
    return w;
}

}  // namespace halq
