#pragma once

#include "lgkit/rational.hpp"

#include <cstddef>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lgkit {

// Sparse vector: (column, value) pairs, columns strictly increasing, no zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

// Incremental row echelon form over Q. A row's pivot is its smallest column,
// so callers put the columns they want eliminated first at low indices.
// Rows produced by the Jacobian ideal of an invertible polynomial have at most
// two entries, and elimination keeps it that way, so this stays near-linear.
class SparseEchelon {
public:
    explicit SparseEchelon(std::size_t num_cols) : num_cols_(num_cols) {}

    // Reduces `row` against the stored pivots; stores it if it survives.
    // Returns true when the rank grew.
    bool insert(SparseVector row);

    // Full reduction: the result has no entry in any pivot column.
    SparseVector reduce(SparseVector row) const;

    std::size_t rank() const { return pivots_.size(); }
    std::size_t num_cols() const { return num_cols_; }
    bool is_pivot(std::size_t col) const { return pivots_.count(col) != 0; }

    // Non-pivot columns in increasing order.
    std::vector<std::size_t> free_columns() const;

private:
    std::size_t num_cols_;
    // pivot column -> row normalized so its pivot entry is 1
    std::unordered_map<std::size_t, SparseVector> pivots_;
};

// a - factor * b
SparseVector axpy(const SparseVector& a, const Rational& factor, const SparseVector& b);

} // namespace lgkit
