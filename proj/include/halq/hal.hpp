#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace halq {

/// Sliding-window co-occurrence matrix of one document.
///
/// Rows index the later-occurring stem, columns the earlier one. Every
/// position i contributes weight (window - 1 - d) to cell
/// [stems[i]][stems[i-d]] for each distance d in [0, window-2], d <= i;
/// the d = 0 term puts (window - 1) per occurrence on the diagonal.
struct HalMatrix {
    std::vector<std::string> vocab;   // distinct stems, lexicographically sorted
    int window = 0;
    std::vector<std::uint64_t> cells; // row-major k*k
    std::string source;               // document id, informational only

    std::size_t k() const { return vocab.size(); }
    std::uint64_t at(std::size_t row, std::size_t col) const { return cells[row * k() + col]; }
    std::optional<std::size_t> index_of(std::string_view stem) const;
};

/// Builds the matrix in one pass. Throws InvalidWindowError if window < 2.
HalMatrix build_matrix(std::span<const std::string> stems, int window, std::string source = {});

/// Row of a stem concatenated with its column, both in vocab order (length 2k).
struct WordVector {
    std::string stem;
    std::vector<double> values;
};

/// Entrywise sum of all word vectors: column sums then row sums (length 2k).
struct DocumentVector {
    std::vector<double> values;
};

/// Throws KeywordAbsentError if the stem is not in the vocabulary.
WordVector word_vector(const HalMatrix& m, std::string_view stem);

/// Throws EmptyDocumentError on a 0x0 matrix.
DocumentVector document_vector(const HalMatrix& m);

/// CSV rendering: header row/column are the vocabulary, cells are integers.
std::string matrix_csv(const HalMatrix& m);

}  // namespace halq
