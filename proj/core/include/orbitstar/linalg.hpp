#pragma once

#include "orbitstar/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace orbitstar {

using SparseRow = std::map<int, Rational>;
using DenseMatrix = std::vector<std::vector<Rational>>;

// Incrementally maintained reduced row echelon form. The pivot of a row is
// its smallest column index, so low columns are eliminated first.
class RowEchelon {
 public:
  // Returns true when the row was independent of those already present.
  bool add(SparseRow row);
  // Remainder of row after subtracting multiples of the pivot rows.
  SparseRow reduce(SparseRow row) const;
  bool contains(const SparseRow& row) const { return reduce(row).empty(); }

  std::size_t rank() const { return rows_.size(); }
  const std::map<int, SparseRow>& rows() const { return rows_; }  // pivot column -> row
  bool is_pivot(int col) const { return rows_.count(col) != 0; }

  // Basis of the solution space of {row . v = 0} over columns [0, ncols).
  std::vector<SparseRow> kernel(int ncols) const;

 private:
  std::map<int, SparseRow> rows_;
};

void axpy(SparseRow& y, const Rational& a, const SparseRow& x);

std::optional<DenseMatrix> inverse(DenseMatrix m);
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace orbitstar
