#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "whitmod/rational.hpp"

namespace whitmod {

// One sparse row: (column, value) pairs sorted by column, no zeros stored.
using SparseRow = std::vector<std::pair<int, Rational>>;

struct SparseMatrix {
  int cols = 0;
  std::vector<SparseRow> rows;

  void add_row(SparseRow r) { rows.push_back(std::move(r)); }
  std::size_t nrows() const { return rows.size(); }
};

struct KernelResult {
  // Null-space basis in reduced-echelon parametrization: one vector per free
  // column (ascending), carrying 1 at its free column.  Deterministic.
  std::vector<SparseRow> basis;
  int rank = 0;
};

// Exact null space via fraction-free (integer-preserving) elimination with
// content reduction, normalized at the end.
KernelResult kernel(const SparseMatrix& m);

}  // namespace whitmod
