#pragma once

#include <vector>

#include "antiexact/rational.hpp"

namespace antiexact {

/// One linear equation: sorted sparse coefficient list and a right-hand side.
struct SparseRow {
    std::vector<std::pair<int, Rational>> entries;  // (column, value), ascending columns
    Rational rhs;
};

/// Finite sparse system over the rationals. Rows and columns are produced by
/// enumerating (index set, fiber, monomial) coordinates upstream.
struct SparseSystem {
    int num_cols = 0;
    std::vector<SparseRow> rows;

    void add_row(SparseRow row) { rows.push_back(std::move(row)); }
};

struct LinsysResult {
    /// False iff some row reduced to 0 = nonzero. The particular solution
    /// then still solves the consistent subsystem (free variables zero).
    bool consistent = true;
    std::vector<Rational> particular;
    std::vector<std::vector<Rational>> kernel;
};

/// Exact fraction-free elimination with pivoting by row sparsity. Returns a
/// particular solution with free variables set to zero plus a basis of the
/// homogeneous kernel.
LinsysResult solve_sparse(const SparseSystem& sys);

}  // namespace antiexact
