#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "halq/errors.hpp"
#include "halq/query.hpp"
#include "support.hpp"

using namespace halq;

namespace {

const PreprocessConfig kCfg{};

std::set<std::string> selected_ids(const std::string& query, Label label) {
    std::set<std::string> ids;
    for (const auto& doc : select_subcorpus(testing::bundled_corpus(),
                                            parse_query(query, kCfg), kCfg))
        if (doc.label == label) ids.insert(doc.id);
    return ids;
}

}  // namespace

TEST_CASE("parse_query: conjunction and negation") {
    const QueryAst q1 = parse_query("black*white*women", kCfg);
    CHECK(q1.positives == std::vector<std::string>{"black", "white", "women"});
    CHECK(q1.negatives.empty());

    const QueryAst q2 = parse_query("white*women-black", kCfg);
    CHECK(q2.positives == std::vector<std::string>{"white", "women"});
    CHECK(q2.negatives == std::vector<std::string>{"black"});
}

TEST_CASE("parse_query: terms are stored as stems") {
    const QueryAst q = parse_query("bashing*Whites", kCfg);
    CHECK(q.positives == std::vector<std::string>{"bash", "white"});
}

TEST_CASE("parse_query: errors carry positions") {
    CHECK_THROWS_AS(parse_query("", kCfg), QueryParseError);
    CHECK_THROWS_AS(parse_query("   ", kCfg), QueryParseError);
    CHECK_THROWS_AS(parse_query("women-", kCfg), QueryParseError);
    CHECK_THROWS_AS(parse_query("*women", kCfg), QueryParseError);
    CHECK_THROWS_AS(parse_query("women*-black", kCfg), QueryParseError);
    CHECK_THROWS_AS(parse_query("a*b-a", kCfg), QueryParseError);
    CHECK_THROWS_AS(parse_query("wo?men", kCfg), QueryParseError);

    try {
        parse_query("women-", kCfg);
    } catch (const QueryParseError& e) {
        CHECK(e.position() == 6);
        CHECK(std::string(e.what()).find("position 6") != std::string::npos);
    }
    try {
        parse_query("a*b-a", kCfg);
    } catch (const QueryParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("eval_query: membership semantics") {
    const QueryAst q = parse_query("black*women-white", kCfg);
    const std::vector<std::string> with_all{"black", "x", "women", "white"};
    const std::vector<std::string> without_white{"black", "x", "women"};
    const std::vector<std::string> empty;
    CHECK(!eval_query(q, with_all));
    CHECK(eval_query(q, without_white));
    CHECK(!eval_query(q, empty));
}

TEST_CASE("eval_query: adding a positive term never grows the selection") {
    std::mt19937 rng(21);
    std::uniform_int_distribution<int> sym(0, 5);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<std::vector<std::string>> docs(20);
        for (auto& d : docs) d = testing::random_doc(rng, 12, 6);

        QueryAst q;
        q.positives = {std::string(1, static_cast<char>('a' + sym(rng)))};
        QueryAst stricter = q;
        std::string extra(1, static_cast<char>('a' + sym(rng)));
        if (std::find(stricter.positives.begin(), stricter.positives.end(), extra) ==
            stricter.positives.end())
            stricter.positives.push_back(extra);

        for (const auto& d : docs)
            if (eval_query(stricter, d)) CHECK(eval_query(q, d));
    }
}

TEST_CASE("select_subcorpus: reproduces the bundled sub-corpora") {
    using S = std::set<std::string>;
    CHECK(selected_ids("black*white*women", Label::hate) ==
          S{"H.WBWh.1", "H.WBWh.2", "H.WBWh.3", "H.WBWh.4"});
    CHECK(selected_ids("white*women-black", Label::hate) ==
          S{"H.WhW-B.1", "H.WhW-B.2", "H.WhW-B.3"});
    CHECK(selected_ids("black*women-white", Label::hate) == S{"H.BW-Wh.1", "H.BW-Wh.2"});
    CHECK(selected_ids("black*white*women", Label::nohate) == S{"NH.WBWh.1", "NH.WBWh.2"});
    CHECK(selected_ids("white*women-black", Label::nohate) ==
          S{"NH.WhW-B.1", "NH.WhW-B.2", "NH.WhW-B.3", "NH.WhW-B.4", "NH.WhW-B.5",
            "NH.WhW-B.6"});
    CHECK(selected_ids("black*women-white", Label::nohate) ==
          S{"NH.BW-Wh.1", "NH.BW-Wh.2", "NH.BW-Wh.3", "NH.BW-Wh.4", "NH.BW-Wh.5"});
}

TEST_CASE("select_subcorpus: the three queries partition each label") {
    const char* queries[] = {"black*white*women", "white*women-black", "black*women-white"};
    std::vector<std::set<std::string>> sets;
    std::size_t total = 0;
    for (const char* q : queries) {
        std::set<std::string> ids;
        for (const auto& doc : select_subcorpus(testing::bundled_corpus(),
                                                parse_query(q, kCfg), kCfg))
            ids.insert(doc.id);
        total += ids.size();
        sets.push_back(std::move(ids));
    }
    CHECK(total == testing::bundled_corpus().size());
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            std::vector<std::string> common;
            std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(),
                                  sets[j].end(), std::back_inserter(common));
            CHECK(common.empty());
        }
}

TEST_CASE("select_subcorpus: empty corpus stays empty") {
    const std::vector<RawDocument> corpus;
    CHECK(select_subcorpus(corpus, parse_query("anything", kCfg), kCfg).empty());
}

TEST_CASE("select_subcorpus: keeps corpus order") {
    std::vector<RawDocument> corpus{
        {"d3", Label::hate, "black women"},
        {"d1", Label::nohate, "black women"},
        {"d2", Label::nohate, "no keywords here"},
    };
    const auto sel = select_subcorpus(corpus, parse_query("black*women", kCfg), kCfg);
    REQUIRE(sel.size() == 2);
    CHECK(sel[0].id == "d3");
    CHECK(sel[1].id == "d1");
}
