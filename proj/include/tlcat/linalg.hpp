#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

namespace tlcat {

/// Sparse row: (column, value) pairs with strictly increasing columns and no
/// zero values.
using SparseRow = std::vector<std::pair<int, mpq_class>>;

/// Incrementally maintained row-echelon basis over Q. Each stored row has
/// leading coefficient 1.
class RowEchelon {
public:
  explicit RowEchelon(int cols) : cols_(cols) {}

  /// Reduces `row` against the basis; returns true if it was independent
  /// (and has been added).
  bool insert(SparseRow row);

  /// Reduction of `row` modulo the current span.
  SparseRow reduce(SparseRow row) const;

  int rank() const { return static_cast<int>(pivots_.size()); }
  int cols() const { return cols_; }

private:
  int cols_;
  std::map<int, SparseRow> pivots_;
};

/// Rank of a dense matrix over Q.
int rank(const std::vector<std::vector<mpq_class>> &rows, int cols);

/// Basis of the right kernel {v : A v = 0} of a dense matrix over Q.
std::vector<std::vector<mpq_class>> kernel_basis(std::vector<std::vector<mpq_class>> rows, int cols);

} // namespace tlcat
