#pragma once

#include <map>
#include <utility>
#include <vector>

#include "tenscanon/rational.hpp"

namespace tenscanon {

/// Sparse row vector over the rationals: (column, coefficient) pairs with
/// strictly increasing columns and nonzero coefficients.
using SparseRow = std::vector<std::pair<int, Rational>>;

/// Sums sparse rows: out += c * r.
void axpy(SparseRow& out, const Rational& c, const SparseRow& r);

/// Incremental reduced row echelon form over sparse rational rows.
///
/// Rows are kept fully reduced (each pivot column appears in no other row,
/// pivot coefficient 1). The leading column of a row is its smallest column
/// index; callers choose the elimination preference by how they map their
/// objects onto columns. The canonicalizer maps symbol s to column N-1-s, so
/// pivots consume lexicographically *largest* symbols first and the surviving
/// non-pivot columns are the greedy lexicographically-smallest basis.
class RowReducer {
 public:
  /// Reduces r against the pivots; returns the (possibly empty) remainder.
  SparseRow reduce(SparseRow r) const;

  /// Reduces r and, when a nonzero remainder survives, installs it as a new
  /// pivot row (normalized, back-substituted into the existing rows).
  /// Returns true when the rank grew.
  bool insert(SparseRow r);

  int rank() const { return static_cast<int>(rows_.size()); }
  bool is_pivot(int col) const { return pivot_row_.count(col) != 0; }
  const std::map<int, int>& pivots() const { return pivot_row_; }  // col -> row
  const std::vector<SparseRow>& rows() const { return rows_; }

 private:
  std::vector<SparseRow> rows_;
  std::map<int, int> pivot_row_;
};

}  // namespace tenscanon
