// halq - HAL co-occurrence matrices, keyword cosine similarity, and
// Born-rule correlation scores per document, with CSV/SVG reports.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"
#include "halq/corpus.hpp"
#include "halq/errors.hpp"
#include "halq/hal.hpp"
#include "halq/preprocess.hpp"
#include "halq/query.hpp"
#include "halq/report.hpp"
#include "halq/semspace.hpp"

namespace fs = std::filesystem;
using namespace halq;

namespace {

constexpr int kExitUsage = 2;
constexpr int kMinWindow = 2;
constexpr int kMaxWindow = 64;

bool use_color() {
    return ::isatty(::fileno(stderr)) && std::getenv("HALQ_NO_COLOR") == nullptr;
}

void print_error(const std::string& msg) {
    if (use_color())
        std::cerr << "\x1b[31merror:\x1b[0m " << msg << '\n';
    else
        std::cerr << "error: " << msg << '\n';
}

void print_note(const std::string& msg) { std::cerr << "note: " << msg << '\n'; }

struct CommonOpts {
    std::string corpus;
    std::string stemmer = "porter";
    std::string stopwords = "none";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--corpus", opts.corpus, "JSON-Lines corpus file")->required();
    cmd->add_option("--stemmer", opts.stemmer, "Stemmer: porter|none")
        ->check(CLI::IsMember({"porter", "none"}));
    cmd->add_option("--stopwords", opts.stopwords,
                    "Stopword lexicon file, or 'none' to keep all tokens");
}

PreprocessConfig make_config(const CommonOpts& opts) {
    PreprocessConfig cfg;
    cfg.stemmer = opts.stemmer == "none" ? Stemmer::none : Stemmer::porter;
    if (opts.stopwords != "none") {
        cfg.stopword_removal = true;
        cfg.stopword_lexicon = load_stopwords(opts.stopwords);
        if (cfg.stopword_lexicon.empty())
            throw RangeError("stopword lexicon '" + opts.stopwords + "' is empty");
    }
    return cfg;
}

// "A..B" (inclusive) or a single "N"; bounds checked against [2, 64].
std::vector<int> parse_windows(const std::string& spec) {
    int lo = 0, hi = 0;
    const auto dots = spec.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoi(spec);
        } else {
            lo = std::stoi(spec.substr(0, dots));
            hi = std::stoi(spec.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw RangeError("cannot parse window range '" + spec + "' (expected N or A..B)");
    }
    if (lo < kMinWindow || hi > kMaxWindow || lo > hi)
        throw RangeError("window range must lie within [" + std::to_string(kMinWindow) + ", " +
                         std::to_string(kMaxWindow) + "], got '" + spec + "'");
    std::vector<int> windows;
    for (int w = lo; w <= hi; ++w) windows.push_back(w);
    return windows;
}

std::pair<std::string, std::string> parse_pair(const std::string& spec,
                                               const PreprocessConfig& cfg) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == spec.size())
        throw RangeError("cannot parse keyword pair '" + spec + "' (expected a:b)");
    auto lower = [](std::string s) {
        std::transform(s.begin(), s.end(), s.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        return s;
    };
    return {stem_token(lower(spec.substr(0, colon)), cfg),
            stem_token(lower(spec.substr(colon + 1)), cfg)};
}

std::vector<std::pair<std::string, std::string>> parse_pairs(const std::string& spec,
                                                             const PreprocessConfig& cfg) {
    std::vector<std::pair<std::string, std::string>> pairs;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) pairs.push_back(parse_pair(item, cfg));
    if (pairs.empty()) throw RangeError("at least one keyword pair is required");
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return pairs;
}

const RawDocument& find_doc(const std::vector<RawDocument>& corpus, const std::string& id) {
    for (const auto& doc : corpus)
        if (doc.id == id) return doc;
    throw RangeError("document '" + id + "' not found in corpus");
}

Axis parse_axis(const std::string& s) {
    if (s == "x") return Axis::x;
    if (s == "y") return Axis::y;
    return Axis::z;
}

Orientation parse_orientation(const std::string& s) {
    return s == "gs-raw" ? Orientation::gs_raw : Orientation::oriented;
}

// --- subcommand payloads ---

struct MatrixArgs {
    CommonOpts common;
    std::string doc_id;
    int window = 0;
    std::string out_dir;
};

int run_matrix(const MatrixArgs& args) {
    const auto cfg = make_config(args.common);
    const auto corpus = load_corpus(fs::path(args.common.corpus));
    const RawDocument& doc = find_doc(corpus, args.doc_id);
    if (args.window < kMinWindow || args.window > kMaxWindow)
        throw RangeError("window must lie within [2, 64], got " + std::to_string(args.window));

    const HalMatrix m = build_matrix(preprocess(doc, cfg), args.window, doc.id);
    const std::string csv = matrix_csv(m);
    if (args.out_dir.empty()) {
        std::cout << csv;
    } else {
        fs::create_directories(args.out_dir);
        const fs::path path = fs::path(args.out_dir) / ("matrix_" + doc.id + "_w" +
                                                        std::to_string(args.window) + ".csv");
        std::ofstream out(path, std::ios::binary);
        if (!out) throw IoError("cannot write '" + path.string() + "'");
        out << csv;
        out.flush();
        if (!out) throw IoError("write failed for '" + path.string() + "'");
        print_note("wrote " + path.string());
    }
    return 0;
}

struct AnalyzeArgs {
    CommonOpts common;
    std::string query;
    std::string pairs = "black:women,white:women,black:white";
    std::string windows = "4..10";
    std::string axis = "x";
    std::string orientation = "oriented";
    std::string format = "csv";
    std::string out_dir;
};

struct AnalysisOutput {
    std::vector<AnalysisRecord> records;
    std::vector<ProfileSeries> series;
};

AnalysisOutput run_analysis(const std::vector<RawDocument>& docs,
                            const std::vector<std::pair<std::string, std::string>>& pairs,
                            const std::vector<int>& windows, const PreprocessConfig& cfg,
                            Axis axis, Orientation orientation) {
    std::vector<const RawDocument*> ordered;
    for (const auto& d : docs) ordered.push_back(&d);
    std::sort(ordered.begin(), ordered.end(),
              [](const RawDocument* a, const RawDocument* b) { return a->id < b->id; });

    AnalysisOutput out;
    for (const RawDocument* doc : ordered) {
        for (const auto& [a, b] : pairs) {
            ProfileSeries series = sweep(*doc, a, b, windows, cfg, axis, orientation);
            bool any_present = false;
            for (const ProfilePoint& p : series.points) {
                if (p.absent) continue;
                any_present = true;
                CorrelationResult res;
                res.doc_id = doc->id;
                res.stem_a = a;
                res.stem_b = b;
                res.window = p.window;
                res.cosine = p.cosine;
                res.r = p.r;
                res.degenerate = p.degenerate;
                out.records.push_back(make_record(doc->label, res));
            }
            if (any_present)
                out.series.push_back(std::move(series));
            else
                print_note("pair " + a + ":" + b + " absent from document '" + doc->id +
                           "'; skipped");
        }
    }
    return out;
}

int run_analyze(const AnalyzeArgs& args) {
    const auto cfg = make_config(args.common);
    auto corpus = load_corpus(fs::path(args.common.corpus));
    if (!args.query.empty()) {
        const QueryAst ast = parse_query(args.query, cfg);
        corpus = select_subcorpus(corpus, ast, cfg);
    }
    const auto pairs = parse_pairs(args.pairs, cfg);
    const auto windows = parse_windows(args.windows);

    const AnalysisOutput out = run_analysis(corpus, pairs, windows, cfg,
                                            parse_axis(args.axis),
                                            parse_orientation(args.orientation));

    const bool want_csv = args.format == "csv" || args.format == "both";
    const bool want_svg = args.format == "svg" || args.format == "both";
    if (want_svg && args.out_dir.empty())
        throw RangeError("--format " + args.format + " requires --out");

    if (args.out_dir.empty()) {
        emit_csv(out.records, std::cout);
        return 0;
    }
    fs::create_directories(args.out_dir);
    if (want_csv) {
        const fs::path path = fs::path(args.out_dir) / "analysis.csv";
        std::ofstream os(path, std::ios::binary);
        if (!os) throw IoError("cannot write '" + path.string() + "'");
        emit_csv(out.records, os);
        os.flush();
        if (!os) throw IoError("write failed for '" + path.string() + "'");
        print_note("wrote " + path.string());
    }
    if (want_svg) {
        if (out.series.empty()) {
            print_note("no plottable series; SVG not written");
        } else {
            const fs::path path = fs::path(args.out_dir) / "profiles.svg";
            std::ofstream os(path, std::ios::binary);
            if (!os) throw IoError("cannot write '" + path.string() + "'");
            emit_svg(out.series, os);
            os.flush();
            if (!os) throw IoError("write failed for '" + path.string() + "'");
            print_note("wrote " + path.string());
        }
    }
    return 0;
}

struct SweepArgs {
    CommonOpts common;
    std::string doc_id;
    std::string pair;
    std::string windows = "4..10";
    std::string axis = "x";
    std::string orientation = "oriented";
};

int run_sweep(const SweepArgs& args) {
    const auto cfg = make_config(args.common);
    const auto corpus = load_corpus(fs::path(args.common.corpus));
    const RawDocument& doc = find_doc(corpus, args.doc_id);
    const auto [a, b] = parse_pair(args.pair, cfg);
    const auto windows = parse_windows(args.windows);

    const std::vector<RawDocument> one{doc};
    const AnalysisOutput out = run_analysis(one, {{a, b}}, windows, cfg,
                                            parse_axis(args.axis),
                                            parse_orientation(args.orientation));
    emit_csv(out.records, std::cout);
    return 0;
}

struct SelectArgs {
    CommonOpts common;
    std::string query;
    std::string label = "all";
};

int run_select(const SelectArgs& args) {
    const auto cfg = make_config(args.common);
    const auto corpus = load_corpus(fs::path(args.common.corpus));
    const QueryAst ast = parse_query(args.query, cfg);
    for (const RawDocument& doc : select_subcorpus(corpus, ast, cfg)) {
        if (args.label != "all" && args.label != to_string(doc.label)) continue;
        std::cout << doc.id << '\n';
    }
    return 0;
}

struct CompareArgs {
    CommonOpts common;
    std::string ref_id;
    std::string pair;
    std::string query;
    std::string windows = "4..10";
    std::string axis = "x";
    std::string orientation = "oriented";
};

int run_compare(const CompareArgs& args) {
    const auto cfg = make_config(args.common);
    auto corpus = load_corpus(fs::path(args.common.corpus));
    const RawDocument ref = find_doc(corpus, args.ref_id);  // copy before filtering
    if (!args.query.empty()) {
        const QueryAst ast = parse_query(args.query, cfg);
        corpus = select_subcorpus(corpus, ast, cfg);
    }
    const auto [a, b] = parse_pair(args.pair, cfg);
    const auto windows = parse_windows(args.windows);
    const Axis axis = parse_axis(args.axis);
    const Orientation orientation = parse_orientation(args.orientation);

    const ProfileSeries ref_profile = sweep(ref, a, b, windows, cfg, axis, orientation);

    std::vector<std::pair<double, std::string>> ranking;
    for (const RawDocument& doc : corpus) {
        const ProfileSeries p = sweep(doc, a, b, windows, cfg, axis, orientation);
        ranking.emplace_back(profile_distance(ref_profile, p), doc.id);
    }
    std::sort(ranking.begin(), ranking.end());

    std::cout << "rank,doc_id,distance\n";
    char buf[32];
    for (std::size_t i = 0; i < ranking.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.6f", ranking[i].first);
        std::cout << (i + 1) << ',' << ranking[i].second << ',' << buf << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"HAL co-occurrence matrices, keyword cosine similarity, and Born-rule "
                 "correlation per document"};
    app.require_subcommand(1);

    MatrixArgs matrix_args;
    CLI::App* matrix_cmd = app.add_subcommand("matrix", "Emit a document's HAL matrix as CSV");
    add_common(matrix_cmd, matrix_args.common);
    matrix_cmd->add_option("--doc", matrix_args.doc_id, "Document id")->required();
    matrix_cmd->add_option("--window", matrix_args.window, "Window length")->required();
    matrix_cmd->add_option("--out", matrix_args.out_dir, "Output directory (default: stdout)");

    AnalyzeArgs analyze_args;
    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "Correlate keyword pairs over documents and windows");
    add_common(analyze_cmd, analyze_args.common);
    analyze_cmd->add_option("--query", analyze_args.query, "Keyword query, e.g. black*women-white");
    analyze_cmd->add_option("--pairs", analyze_args.pairs, "Keyword pairs a:b[,c:d...]")
        ->capture_default_str();
    analyze_cmd->add_option("--windows,--window", analyze_args.windows, "Window range A..B or single N")->capture_default_str();
    analyze_cmd->add_option("--axis", analyze_args.axis, "Operator axis")
        ->check(CLI::IsMember({"x", "y", "z"}));
    analyze_cmd->add_option("--orientation", analyze_args.orientation, "Perpendicular convention")
        ->check(CLI::IsMember({"oriented", "gs-raw"}));
    analyze_cmd->add_option("--format", analyze_args.format, "Output format")
        ->check(CLI::IsMember({"csv", "svg", "both"}));
    analyze_cmd->add_option("--out", analyze_args.out_dir, "Output directory (default: stdout)");

    SweepArgs sweep_args;
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "Profile one document and pair over a window range");
    add_common(sweep_cmd, sweep_args.common);
    sweep_cmd->add_option("--doc", sweep_args.doc_id, "Document id")->required();
    sweep_cmd->add_option("--pair", sweep_args.pair, "Keyword pair a:b")->required();
    sweep_cmd->add_option("--windows,--window", sweep_args.windows, "Window range A..B or single N")->capture_default_str();
    sweep_cmd->add_option("--axis", sweep_args.axis, "Operator axis")
        ->check(CLI::IsMember({"x", "y", "z"}));
    sweep_cmd->add_option("--orientation", sweep_args.orientation, "Perpendicular convention")
        ->check(CLI::IsMember({"oriented", "gs-raw"}));

    SelectArgs select_args;
    CLI::App* select_cmd = app.add_subcommand("select", "List corpus documents matching a query");
    add_common(select_cmd, select_args.common);
    select_cmd->add_option("--query", select_args.query, "Keyword query")->required();
    select_cmd->add_option("--label", select_args.label, "Filter by label")
        ->check(CLI::IsMember({"hate", "nohate", "all"}));

    CompareArgs compare_args;
    CLI::App* compare_cmd =
        app.add_subcommand("compare", "Rank documents by r-profile distance to a reference");
    add_common(compare_cmd, compare_args.common);
    compare_cmd->add_option("--ref", compare_args.ref_id, "Reference document id")->required();
    compare_cmd->add_option("--pair", compare_args.pair, "Keyword pair a:b")->required();
    compare_cmd->add_option("--query", compare_args.query, "Optional query filter");
    compare_cmd->add_option("--windows,--window", compare_args.windows, "Window range A..B or single N")->capture_default_str();
    compare_cmd->add_option("--axis", compare_args.axis, "Operator axis")
        ->check(CLI::IsMember({"x", "y", "z"}));
    compare_cmd->add_option("--orientation", compare_args.orientation, "Perpendicular convention")
        ->check(CLI::IsMember({"oriented", "gs-raw"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::stringstream ss;
        const int rc = app.exit(e, ss, ss);
        (void)rc;
        print_error(ss.str());
        return kExitUsage;
    }

    try {
        if (matrix_cmd->parsed()) return run_matrix(matrix_args);
        if (analyze_cmd->parsed()) return run_analyze(analyze_args);
        if (sweep_cmd->parsed()) return run_sweep(sweep_args);
        if (select_cmd->parsed()) return run_select(select_args);
        if (compare_cmd->parsed()) return run_compare(compare_args);
    } catch (const Error& e) {
        print_error(e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        print_error(std::string("unexpected: ") + e.what());
        return 1;
    }
    return 0;
}
