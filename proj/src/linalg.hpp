#pragma once

#include <vector>

#include "scalar.hpp"

namespace hgc {

// Dense exact linear algebra over Gaussian rationals; everything here is
// plain Gaussian elimination with exact division.
using ScalarRow = std::vector<Scalar>;

int matrix_rank(std::vector<ScalarRow> rows);

struct SolveResult {
  bool consistent = false;
  ScalarRow solution;  // a particular solution (free variables set to zero)
};

// Solves A·x = b for the m×n matrix given row-wise.
SolveResult solve_linear(std::vector<ScalarRow> a, ScalarRow b);

// Row space maintained in reduced echelon form, for incremental span and
// membership questions.
class RowSpace {
 public:
  explicit RowSpace(int width) : width_(width) {}
  int width() const { return width_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  // Inserts the row; returns true when the span grew.
  bool add(ScalarRow row);
  bool contains(ScalarRow row) const;

 private:
  // Eliminates the known pivots from the row in place.
  void reduce(ScalarRow& row) const;
  int width_;
  std::vector<ScalarRow> rows_;  // pivot columns strictly increasing
  std::vector<int> pivots_;
};

}  // namespace hgc
