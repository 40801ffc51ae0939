#pragma once

#include <array>
#include <complex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "halq/hal.hpp"

namespace halq {

/// Sign convention for the perpendicular of the second keyword basis.
///
/// `oriented` (default) rotates u_b by +90 degrees inside the plane, the same
/// rotation that produces u_aperp from u_a; the resulting correlation obeys
/// r = 2*cs^2 - 1 on the x axis. `gs_raw` keeps the two-sided Gram-Schmidt
/// residual normalize(w_a - (u_b . w_a) u_b), which flips the sign of r.
enum class Orientation { oriented, gs_raw };

enum class Axis { x, y, z };

enum class WhichBasis { a, b };

/// The two orthonormal pairs {u_a, u_aperp}, {u_b, u_bperp} spanning
/// span{w_a, w_b}. Full-length unit vectors plus the coordinates of the
/// b pair in the (u_a, u_aperp) frame, where u_a = (1, 0).
struct PlaneBasis {
    std::vector<double> u_a, u_aperp, u_b, u_bperp;
    std::array<double, 2> u_b_plane{}, u_bperp_plane{};
    double theta = 0.0;  // angle between w_a and w_b, in (0, pi)
    Orientation orientation = Orientation::oriented;
};

/// The document state in plane coordinates, with its coefficients on both
/// keyword bases: phi = alpha*u_a + alpha_perp*u_aperp
///                    = beta*u_b + beta_perp*u_bperp.
struct ProjectedState {
    double alpha = 0.0, alpha_perp = 0.0;
    double beta = 0.0, beta_perp = 0.0;
    std::array<double, 2> phi{};
};

/// 2x2 Hermitian involution in plane coordinates for one keyword basis.
struct PauliOperator {
    Axis axis = Axis::x;
    std::array<std::array<std::complex<double>, 2>, 2> matrix{};
};

struct CorrelationResult {
    std::string doc_id;
    std::string stem_a, stem_b;
    int window = 0;
    double cosine = 0.0;
    double r = 0.0;
    Axis axis = Axis::x;
    Orientation orientation = Orientation::oriented;
    bool degenerate = false;
};

/// a.b / (|a||b|); in [0, 1] for nonnegative inputs. Throws ZeroVectorError.
double cosine(const WordVector& a, const WordVector& b);
double cosine(std::span<const double> a, std::span<const double> b);

/// Gram-Schmidt plane construction. Throws DegeneratePairError when the
/// vectors are parallel (|cos theta| >= 1 - 1e-12), ZeroVectorError on zero
/// input.
PlaneBasis plane_basis(const WordVector& w_a, const WordVector& w_b,
                       Orientation orientation = Orientation::oriented);

/// Projects psi onto the plane and normalizes; throws ZeroProjectionError
/// when the projection vanishes.
ProjectedState project_state(const DocumentVector& psi, const PlaneBasis& basis);

PauliOperator pauli_operator(Axis axis, WhichBasis which, const PlaneBasis& basis);

/// Re( phi^T . (M_a M_b) . phi ); in [-1, 1] up to rounding.
double born_expectation(const ProjectedState& state, const PauliOperator& op_a,
                        const PauliOperator& op_b);

/// Full per-document pipeline for one keyword pair. A degenerate (parallel)
/// pair yields cosine = 1, r = 1, degenerate = true instead of an error.
/// Throws KeywordAbsentError if either stem is missing from the vocabulary.
CorrelationResult correlate(const HalMatrix& m, std::string_view stem_a,
                            std::string_view stem_b, Axis axis = Axis::x,
                            Orientation orientation = Orientation::oriented);

const char* to_string(Axis axis);
const char* to_string(Orientation orientation);

}  // namespace halq
