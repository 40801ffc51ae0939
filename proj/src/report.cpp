#include "halq/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "halq/errors.hpp"
#include "halq/hal.hpp"

namespace halq {
namespace {

std::string fixed6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string fixed2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

const char* to_string(RelationClass c) {
    switch (c) {
        case RelationClass::opposition: return "opposition";
        case RelationClass::weak: return "weak";
        case RelationClass::equivalence: return "equivalence";
        default: return "degenerate";
    }
}

RelationClass classify_relation(double cs, double r, bool* inconsistent) {
    constexpr double slack = 1e-9;
    if (cs < -slack || cs > 1.0 + slack)
        throw RangeError("cosine out of range: " + fixed6(cs));
    if (r < -1.0 - slack || r > 1.0 + slack)
        throw RangeError("correlation out of range: " + fixed6(r));

    RelationClass c = cs <= 0.5   ? RelationClass::opposition
                      : cs <= 0.7 ? RelationClass::weak
                                  : RelationClass::equivalence;
    if (inconsistent) {
        constexpr double tol = 1e-6;
        switch (c) {
            case RelationClass::opposition:
                *inconsistent = r > -0.5 + tol;
                break;
            case RelationClass::weak:
                *inconsistent = r < -0.5 - tol || r > tol;
                break;
            default:
                *inconsistent = r <= -0.02 - tol;
                break;
        }
    }
    return c;
}

AnalysisRecord make_record(Label label, const CorrelationResult& res) {
    AnalysisRecord rec;
    rec.doc_id = res.doc_id;
    rec.label = label;
    rec.stem_a = res.stem_a;
    rec.stem_b = res.stem_b;
    rec.window = res.window;
    rec.cosine = res.cosine;
    rec.r = res.r;
    rec.degenerate = res.degenerate;
    rec.relation = res.degenerate ? RelationClass::degenerate
                                  : classify_relation(res.cosine, res.r);
    return rec;
}

ProfileSeries sweep(const RawDocument& doc, const std::string& stem_a,
                    const std::string& stem_b, std::span<const int> windows,
                    const PreprocessConfig& cfg, Axis axis, Orientation orientation) {
    for (std::size_t i = 0; i < windows.size(); ++i) {
        if (windows[i] < 2)
            throw InvalidWindowError("window must be >= 2, got " + std::to_string(windows[i]));
        if (i > 0 && windows[i] <= windows[i - 1])
            throw RangeError("windows must be strictly increasing");
    }

    const auto stems = preprocess(doc, cfg);
    ProfileSeries series{doc.id, stem_a, stem_b, {}};
    series.points.reserve(windows.size());
    for (int w : windows) {
        ProfilePoint point;
        point.window = w;
        try {
            const HalMatrix m = build_matrix(stems, w, doc.id);
            const CorrelationResult res = correlate(m, stem_a, stem_b, axis, orientation);
            point.cosine = res.cosine;
            point.r = res.r;
            point.degenerate = res.degenerate;
        } catch (const KeywordAbsentError&) {
            point.absent = true;
        } catch (const EmptyDocumentError&) {
            point.absent = true;
        }
        series.points.push_back(point);
    }
    return series;
}

double profile_distance(const ProfileSeries& p, const ProfileSeries& q) {
    if (p.points.size() != q.points.size())
        throw RangeError("profiles cover different window ranges");
    for (std::size_t i = 0; i < p.points.size(); ++i)
        if (p.points[i].window != q.points[i].window)
            throw RangeError("profiles cover different window ranges");

    double dist = -1.0;
    for (std::size_t i = 0; i < p.points.size(); ++i) {
        if (p.points[i].absent || q.points[i].absent) continue;
        dist = std::max(dist, std::abs(p.points[i].r - q.points[i].r));
    }
    return dist < 0.0 ? std::numeric_limits<double>::infinity() : dist;
}

void emit_csv(std::span<const AnalysisRecord> records, std::ostream& os) {
    os << "doc_id,label,stem_a,stem_b,window,cosine,r,degenerate,relation_class\n";
    for (const AnalysisRecord& rec : records) {
        os << rec.doc_id << ',' << to_string(rec.label) << ',' << rec.stem_a << ','
           << rec.stem_b << ',' << rec.window << ',' << fixed6(rec.cosine) << ','
           << fixed6(rec.r) << ',' << (rec.degenerate ? "true" : "false") << ','
           << to_string(rec.relation) << '\n';
    }
}

namespace {

constexpr double kPlotLeft = 60.0;
constexpr double kPlotTop = 34.0;
constexpr double kPlotWidth = 560.0;
constexpr double kPlotHeight = 130.0;
constexpr double kChartHeight = 200.0;
constexpr double kChartWidth = 680.0;

double x_of(int window, int w_min, int w_max) {
    if (w_min == w_max) return kPlotLeft + kPlotWidth / 2.0;
    return kPlotLeft + kPlotWidth * (window - w_min) / double(w_max - w_min);
}

double y_of(double value) {  // value in [-1, 1], top = +1
    return kPlotTop + kPlotHeight * (1.0 - value) / 2.0;
}

void polyline(std::ostream& os, const ProfileSeries& s, bool use_r, int w_min, int w_max,
              const char* style) {
    std::string pts;
    for (const ProfilePoint& p : s.points) {
        if (p.absent) continue;
        if (!pts.empty()) pts += ' ';
        pts += fixed2(x_of(p.window, w_min, w_max));
        pts += ',';
        pts += fixed2(y_of(use_r ? p.r : p.cosine));
    }
    if (!pts.empty()) os << "    <polyline fill=\"none\" " << style << " points=\"" << pts << "\"/>\n";
}

}  // namespace

void emit_svg(std::span<const ProfileSeries> series, std::ostream& os) {
    if (series.empty()) throw RangeError("no series to plot");

    int w_min = series[0].points.empty() ? 0 : series[0].points.front().window;
    int w_max = w_min;
    for (const auto& s : series)
        for (const auto& p : s.points) {
            w_min = std::min(w_min, p.window);
            w_max = std::max(w_max, p.window);
        }

    const double total_height = kChartHeight * double(series.size());
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kChartWidth << "\" height=\""
       << total_height << "\" viewBox=\"0 0 " << kChartWidth << ' ' << total_height << "\">\n";
    os << "  <style>text{font:12px sans-serif}.t{font-weight:bold}</style>\n";

    for (std::size_t idx = 0; idx < series.size(); ++idx) {
        const ProfileSeries& s = series[idx];
        os << "  <g transform=\"translate(0," << fixed2(kChartHeight * double(idx)) << ")\">\n";
        os << "    <text class=\"t\" x=\"" << fixed2(kPlotLeft) << "\" y=\"20\">" << s.doc_id
           << "  " << s.stem_a << ":" << s.stem_b << "</text>\n";
        os << "    <rect x=\"" << fixed2(kPlotLeft) << "\" y=\"" << fixed2(kPlotTop)
           << "\" width=\"" << fixed2(kPlotWidth) << "\" height=\"" << fixed2(kPlotHeight)
           << "\" fill=\"none\" stroke=\"#999\"/>\n";
        // zero line and y labels
        os << "    <line x1=\"" << fixed2(kPlotLeft) << "\" y1=\"" << fixed2(y_of(0.0))
           << "\" x2=\"" << fixed2(kPlotLeft + kPlotWidth) << "\" y2=\"" << fixed2(y_of(0.0))
           << "\" stroke=\"#ccc\"/>\n";
        for (double v : {1.0, 0.0, -1.0})
            os << "    <text x=\"" << fixed2(kPlotLeft - 34.0) << "\" y=\""
               << fixed2(y_of(v) + 4.0) << "\">" << (v < 0 ? "-1" : v > 0 ? "+1" : "0")
               << "</text>\n";
        for (const ProfilePoint& p : s.points)
            os << "    <text x=\"" << fixed2(x_of(p.window, w_min, w_max) - 4.0) << "\" y=\""
               << fixed2(kPlotTop + kPlotHeight + 16.0) << "\">" << p.window << "</text>\n";
        polyline(os, s, /*use_r=*/false, w_min, w_max, "stroke=\"#1f77b4\" stroke-width=\"1.5\"");
        polyline(os, s, /*use_r=*/true, w_min, w_max,
                 "stroke=\"#d62728\" stroke-width=\"1.5\" stroke-dasharray=\"6 3\"");
        os << "    <text x=\"" << fixed2(kPlotLeft + kPlotWidth - 120.0)
           << "\" y=\"20\" fill=\"#1f77b4\">cs</text>\n";
        os << "    <text x=\"" << fixed2(kPlotLeft + kPlotWidth - 90.0)
           << "\" y=\"20\" fill=\"#d62728\">r</text>\n";
        os << "  </g>\n";
    }
    os << "</svg>\n";
}

}  // namespace halq
