#include "linalg.hpp"

#include <algorithm>

#include "error.hpp"

namespace hgc {

namespace {

int first_nonzero(const ScalarRow& row) {
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (!row[j].is_zero()) return static_cast<int>(j);
  }
  return -1;
}

void scale(ScalarRow& row, const Scalar& c) {
  for (auto& v : row) v *= c;
}

// row -= c * other.  The coefficient is taken by value: callers pass an
// element of `row` itself, which the loop overwrites.
void axpy(ScalarRow& row, const Scalar c, const ScalarRow& other) {
  for (std::size_t j = 0; j < row.size(); ++j) row[j] -= c * other[j];
}

}  // namespace

void RowSpace::reduce(ScalarRow& row) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar& c = row[pivots_[i]];
    if (!c.is_zero()) axpy(row, c, rows_[i]);
  }
}

bool RowSpace::add(ScalarRow row) {
  if (static_cast<int>(row.size()) != width_) {
    throw ArgumentError("row width mismatch");
  }
  reduce(row);
  const int p = first_nonzero(row);
  if (p < 0) return false;
  scale(row, Scalar::one() / row[p]);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar& c = rows_[i][p];
    if (!c.is_zero()) axpy(rows_[i], c, row);
  }
  const auto at = std::upper_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + at, p);
  rows_.insert(rows_.begin() + at, std::move(row));
  return true;
}

bool RowSpace::contains(ScalarRow row) const {
  if (static_cast<int>(row.size()) != width_) {
    throw ArgumentError("row width mismatch");
  }
  reduce(row);
  return first_nonzero(row) < 0;
}

int matrix_rank(std::vector<ScalarRow> rows) {
  if (rows.empty()) return 0;
  RowSpace space(static_cast<int>(rows.front().size()));
  for (auto& r : rows) space.add(std::move(r));
  return space.rank();
}

SolveResult solve_linear(std::vector<ScalarRow> a, ScalarRow b) {
  const std::size_t m = a.size();
  if (b.size() != m) throw ArgumentError("right-hand side length mismatch");
  const std::size_t n = m == 0 ? 0 : a.front().size();

  // Augmented elimination to reduced echelon form.
  for (auto& row : a) {
    if (row.size() != n) throw ArgumentError("ragged matrix");
  }
  std::vector<ScalarRow> aug(m, ScalarRow(n + 1, Scalar::zero()));
  for (std::size_t i = 0; i < m; ++i) {
    std::copy(a[i].begin(), a[i].end(), aug[i].begin());
    aug[i][n] = b[i];
  }

  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    std::size_t sel = r;
    while (sel < m && aug[sel][col].is_zero()) ++sel;
    if (sel == m) continue;
    std::swap(aug[sel], aug[r]);
    scale(aug[r], Scalar::one() / aug[r][col]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i != r && !aug[i][col].is_zero()) axpy(aug[i], aug[i][col], aug[r]);
    }
    pivot_col.push_back(static_cast<int>(col));
    ++r;
  }

  SolveResult out;
  for (std::size_t i = r; i < m; ++i) {
    if (!aug[i][n].is_zero()) return out;  // 0 = nonzero row
  }
  out.consistent = true;
  out.solution.assign(n, Scalar::zero());
  for (std::size_t i = 0; i < pivot_col.size(); ++i) {
    out.solution[pivot_col[i]] = aug[i][n];
  }
  return out;
}

}  // namespace hgc
