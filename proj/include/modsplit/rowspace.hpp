#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "modsplit/intmat.hpp"

namespace modsplit {

// Incremental exact row space over the rationals. Pivot rows are kept
// fraction-free (integer entries, gcd-normalized, positive leading pivot), so
// the structure stays small even when thousands of rows stream through it.
class RowSpaceZ {
public:
    explicit RowSpaceZ(size_t width) : width_(width) {}

    size_t width() const { return width_; }
    size_t rank() const { return pivots_.size(); }

    // Reduces the row against the pivot basis; if a nonzero remainder survives
    // it becomes a new pivot row and the call returns true.
    bool add_row(const std::vector<int64_t>& row);

    // True iff the row lies in the current span.
    bool contains(const std::vector<int64_t>& row) const;

private:
    // rows_[i] has its leading nonzero at column pivots_[i]; pivots_ ascending.
    void reduce(std::vector<mpz_class>& v) const;

    size_t width_;
    std::vector<std::vector<mpz_class>> rows_;
    std::vector<size_t> pivots_;
};

// Exact rank of a list of equal-length rows.
size_t row_space_rank(const std::vector<std::vector<int64_t>>& rows);

// A fixed family of linearly independent integer rows (the distinct toric
// matrices, flattened) prepared for repeated exact expansion queries:
// given a target row t, find the unique rational coefficient vector c with
// t = sum c_i row_i, or report that t is outside the span.
class LinearBasisQ {
public:
    explicit LinearBasisQ(std::vector<std::vector<int64_t>> rows);

    size_t size() const { return rows_.size(); }

    // Unique rational expansion; nullopt when t is outside the span.
    std::optional<std::vector<mpq_class>> decompose(const std::vector<int64_t>& t) const;

    // Expansion restricted to integer coefficients; nullopt when the expansion
    // does not exist or is not integral.
    std::optional<std::vector<int64_t>> decompose_integer(const std::vector<int64_t>& t) const;

private:
    std::vector<std::vector<int64_t>> rows_;
    std::vector<size_t> pivot_cols_;              // one independent column per basis row
    std::vector<std::vector<mpq_class>> inv_;     // inverse of rows_[:, pivot_cols_]
};

} // namespace modsplit
