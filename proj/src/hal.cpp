#include "halq/hal.hpp"

#include <algorithm>
#include <unordered_map>

#include "halq/errors.hpp"

namespace halq {

std::optional<std::size_t> HalMatrix::index_of(std::string_view stem) const {
    auto it = std::lower_bound(vocab.begin(), vocab.end(), stem);
    if (it == vocab.end() || *it != stem) return std::nullopt;
    return static_cast<std::size_t>(it - vocab.begin());
}

HalMatrix build_matrix(std::span<const std::string> stems, int window, std::string source) {
    if (window < 2)
        throw InvalidWindowError("window must be >= 2, got " + std::to_string(window));

    HalMatrix m;
    m.window = window;
    m.source = std::move(source);
    m.vocab.assign(stems.begin(), stems.end());
    std::sort(m.vocab.begin(), m.vocab.end());
    m.vocab.erase(std::unique(m.vocab.begin(), m.vocab.end()), m.vocab.end());

    const std::size_t k = m.vocab.size();
    m.cells.assign(k * k, 0);

    std::unordered_map<std::string_view, std::size_t> index;
    index.reserve(k);
    for (std::size_t j = 0; j < k; ++j) index.emplace(m.vocab[j], j);

    std::vector<std::size_t> ids(stems.size());
    for (std::size_t i = 0; i < stems.size(); ++i) ids[i] = index.at(stems[i]);

    const std::size_t max_d = static_cast<std::size_t>(window - 2);
    for (std::size_t i = 0; i < ids.size(); ++i) {
        const std::size_t lim = std::min(i, max_d);
        for (std::size_t d = 0; d <= lim; ++d)
            m.cells[ids[i] * k + ids[i - d]] += static_cast<std::uint64_t>(window - 1) - d;
    }
    return m;
}

WordVector word_vector(const HalMatrix& m, std::string_view stem) {
    auto idx = m.index_of(stem);
    if (!idx) throw KeywordAbsentError(std::string(stem), m.source);

    const std::size_t k = m.k();
    WordVector wv{std::string(stem), std::vector<double>(2 * k)};
    for (std::size_t j = 0; j < k; ++j) {
        wv.values[j] = static_cast<double>(m.at(*idx, j));
        wv.values[k + j] = static_cast<double>(m.at(j, *idx));
    }
    return wv;
}

DocumentVector document_vector(const HalMatrix& m) {
    const std::size_t k = m.k();
    if (k == 0) throw EmptyDocumentError("document vector of an empty matrix");

    DocumentVector psi{std::vector<double>(2 * k, 0.0)};
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) {
            const auto v = static_cast<double>(m.at(r, c));
            psi.values[c] += v;      // column sums
            psi.values[k + r] += v;  // row sums
        }
    return psi;
}

std::string matrix_csv(const HalMatrix& m) {
    std::string out;
    for (const auto& v : m.vocab) {
        out += ',';
        out += v;
    }
    out += '\n';
    const std::size_t k = m.k();
    for (std::size_t r = 0; r < k; ++r) {
        out += m.vocab[r];
        for (std::size_t c = 0; c < k; ++c) {
            out += ',';
            out += std::to_string(m.at(r, c));
        }
        out += '\n';
    }
    return out;
}

}  // namespace halq
