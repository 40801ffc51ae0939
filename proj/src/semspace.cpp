#include "halq/semspace.hpp"

#include <algorithm>
#include <cmath>

#include "halq/errors.hpp"

namespace halq {
namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

double norm(std::span<const double> v) { return std::sqrt(dot(v, v)); }

using Mat2 = std::array<std::array<std::complex<double>, 2>, 2>;

Mat2 multiply(const Mat2& a, const Mat2& b) {
    Mat2 out{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return out;
}

}  // namespace

const char* to_string(Axis axis) {
    switch (axis) {
        case Axis::x: return "x";
        case Axis::y: return "y";
        default: return "z";
    }
}

const char* to_string(Orientation orientation) {
    return orientation == Orientation::oriented ? "oriented" : "gs-raw";
}

double cosine(std::span<const double> a, std::span<const double> b) {
    const double na = norm(a), nb = norm(b);
    if (na == 0.0 || nb == 0.0) throw ZeroVectorError("cosine of a zero vector");
    return dot(a, b) / (na * nb);
}

double cosine(const WordVector& a, const WordVector& b) {
    return cosine(std::span<const double>(a.values), std::span<const double>(b.values));
}

PlaneBasis plane_basis(const WordVector& w_a, const WordVector& w_b, Orientation orientation) {
    const double na = norm(w_a.values);
    const double nb = norm(w_b.values);
    if (na == 0.0 || nb == 0.0) throw ZeroVectorError("plane basis from a zero vector");

    const double cos_theta = dot(w_a.values, w_b.values) / (na * nb);
    if (std::abs(cos_theta) >= 1.0 - 1e-12)
        throw DegeneratePairError("word vectors '" + w_a.stem + "' and '" + w_b.stem +
                                  "' are parallel");

    PlaneBasis basis;
    basis.orientation = orientation;

    const std::size_t n = w_a.values.size();
    basis.u_a.resize(n);
    for (std::size_t i = 0; i < n; ++i) basis.u_a[i] = w_a.values[i] / na;

    // residual of w_b against u_a, normalized
    const double along = dot(basis.u_a, w_b.values);
    basis.u_aperp.resize(n);
    for (std::size_t i = 0; i < n; ++i) basis.u_aperp[i] = w_b.values[i] - along * basis.u_a[i];
    const double res_norm = norm(basis.u_aperp);
    for (double& x : basis.u_aperp) x /= res_norm;

    const double c = std::clamp(cos_theta, -1.0, 1.0);
    const double s = std::sqrt(1.0 - c * c);  // positive by construction
    basis.theta = std::acos(c);
    basis.u_b_plane = {c, s};
    basis.u_bperp_plane = orientation == Orientation::oriented
                              ? std::array<double, 2>{-s, c}
                              : std::array<double, 2>{s, -c};

    basis.u_b.resize(n);
    basis.u_bperp.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        basis.u_b[i] = basis.u_b_plane[0] * basis.u_a[i] + basis.u_b_plane[1] * basis.u_aperp[i];
        basis.u_bperp[i] =
            basis.u_bperp_plane[0] * basis.u_a[i] + basis.u_bperp_plane[1] * basis.u_aperp[i];
    }
    return basis;
}

ProjectedState project_state(const DocumentVector& psi, const PlaneBasis& basis) {
    const double a = dot(basis.u_a, psi.values);
    const double b = dot(basis.u_aperp, psi.values);
    const double n = std::hypot(a, b);
    if (n <= 1e-12 * std::max(1.0, norm(psi.values)))
        throw ZeroProjectionError("document vector has no component in the keyword plane");

    ProjectedState state;
    state.phi = {a / n, b / n};
    state.alpha = state.phi[0];
    state.alpha_perp = state.phi[1];
    state.beta = basis.u_b_plane[0] * state.phi[0] + basis.u_b_plane[1] * state.phi[1];
    state.beta_perp =
        basis.u_bperp_plane[0] * state.phi[0] + basis.u_bperp_plane[1] * state.phi[1];
    return state;
}

PauliOperator pauli_operator(Axis axis, WhichBasis which, const PlaneBasis& basis) {
    const std::array<double, 2> u =
        which == WhichBasis::a ? std::array<double, 2>{1.0, 0.0} : basis.u_b_plane;
    const std::array<double, 2> up =
        which == WhichBasis::a ? std::array<double, 2>{0.0, 1.0} : basis.u_bperp_plane;

    PauliOperator op;
    op.axis = axis;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            switch (axis) {
                case Axis::x:  // |u><up| + |up><u|
                    op.matrix[i][j] = u[i] * up[j] + up[i] * u[j];
                    break;
                case Axis::z:  // |u><u| - |up><up|
                    op.matrix[i][j] = u[i] * u[j] - up[i] * up[j];
                    break;
                case Axis::y:  // -i|u><up| + i|up><u|
                    op.matrix[i][j] = std::complex<double>(0.0, -u[i] * up[j] + up[i] * u[j]);
                    break;
            }
        }
    return op;
}

double born_expectation(const ProjectedState& state, const PauliOperator& op_a,
                        const PauliOperator& op_b) {
    const Mat2 m = multiply(op_a.matrix, op_b.matrix);
    std::complex<double> r = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r += state.phi[i] * m[i][j] * state.phi[j];
    return r.real();
}

CorrelationResult correlate(const HalMatrix& m, std::string_view stem_a,
                            std::string_view stem_b, Axis axis, Orientation orientation) {
    const WordVector w_a = word_vector(m, stem_a);
    const WordVector w_b = word_vector(m, stem_b);

    CorrelationResult result;
    result.doc_id = m.source;
    result.stem_a = std::string(stem_a);
    result.stem_b = std::string(stem_b);
    result.window = m.window;
    result.axis = axis;
    result.orientation = orientation;

    PlaneBasis basis;
    try {
        basis = plane_basis(w_a, w_b, orientation);
    } catch (const DegeneratePairError&) {
        result.cosine = 1.0;
        result.r = 1.0;
        result.degenerate = true;
        return result;
    }

    result.cosine = cosine(w_a, w_b);
    const ProjectedState state = project_state(document_vector(m), basis);
    const PauliOperator op_a = pauli_operator(axis, WhichBasis::a, basis);
    const PauliOperator op_b = pauli_operator(axis, WhichBasis::b, basis);
    result.r = born_expectation(state, op_a, op_b);
    return result;
}

}  // namespace halq
