#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "halq/corpus.hpp"
#include "halq/preprocess.hpp"
#include "halq/semspace.hpp"

namespace halq {

/// Relation bands over (cosine, r): opposition for cs <= 0.5, weak for
/// 0.5 < cs <= 0.7, equivalence for cs > 0.7; degenerate for parallel pairs.
enum class RelationClass { opposition, weak, equivalence, degenerate };

const char* to_string(RelationClass c);

/// Classifies by the cosine bands. If `inconsistent` is given it is set when
/// r falls outside the band expected for that cosine (opposition expects
/// r <= -0.5, weak expects r in [-0.5, 0], equivalence expects r > -0.02).
/// Throws RangeError for cs outside [0,1] or r outside [-1,1] (1e-9 slack).
RelationClass classify_relation(double cs, double r, bool* inconsistent = nullptr);

/// One row of every report.
struct AnalysisRecord {
    std::string doc_id;
    Label label = Label::nohate;
    std::string stem_a, stem_b;
    int window = 0;
    double cosine = 0.0;
    double r = 0.0;
    bool degenerate = false;
    RelationClass relation = RelationClass::weak;
};

AnalysisRecord make_record(Label label, const CorrelationResult& res);

struct ProfilePoint {
    int window = 0;
    double cosine = 0.0;
    double r = 0.0;
    bool degenerate = false;
    bool absent = false;  // keyword missing from the document at this window
};

struct ProfileSeries {
    std::string doc_id;
    std::string stem_a, stem_b;
    std::vector<ProfilePoint> points;  // windows strictly increasing
};

/// One correlation per window. Missing keywords make absent points, never
/// errors. Windows must be >= 2 and strictly increasing.
ProfileSeries sweep(const RawDocument& doc, const std::string& stem_a,
                    const std::string& stem_b, std::span<const int> windows,
                    const PreprocessConfig& cfg, Axis axis = Axis::x,
                    Orientation orientation = Orientation::oriented);

/// Chebyshev distance between r profiles over shared (non-absent) windows;
/// +infinity when no window is shared. Throws RangeError if the two series
/// cover different window grids.
double profile_distance(const ProfileSeries& p, const ProfileSeries& q);

/// CSV schema: doc_id,label,stem_a,stem_b,window,cosine,r,degenerate,relation_class
/// with 6-decimal fixed-point reals. Byte-deterministic for identical input.
void emit_csv(std::span<const AnalysisRecord> records, std::ostream& os);

/// One line chart per series: x = window, cosine solid, r dashed, y in [-1,1].
/// Byte-deterministic for identical input. Requires a nonempty series list.
void emit_svg(std::span<const ProfileSeries> series, std::ostream& os);

}  // namespace halq
