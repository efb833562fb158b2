#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sg/rat.hpp"

namespace sg {

// Dense rational matrix, stored row-major as a list of equal-length rows.
class QMat {
 public:
  QMat() = default;
  QMat(std::size_t nrows, std::size_t ncols)
      : ncols_(ncols), rows_(nrows, zero_vec(ncols)) {}
  explicit QMat(std::vector<QVec> rows);

  static QMat identity(std::size_t n);
  static QMat from_row(QVec row) { return QMat(std::vector<QVec>{std::move(row)}); }

  std::size_t nrows() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  bool empty() const { return rows_.empty(); }

  const QVec& row(std::size_t i) const { return rows_.at(i); }
  QVec& row(std::size_t i) { return rows_.at(i); }
  const Rat& at(std::size_t i, std::size_t j) const { return rows_.at(i).at(j); }
  Rat& at(std::size_t i, std::size_t j) { return rows_.at(i).at(j); }
  const std::vector<QVec>& rows() const { return rows_; }

  void append_row(QVec row);
  void append_rows(const QMat& other);

  QMat transposed() const;
  QVec mul_vec(const QVec& x) const;  // M * x

  friend bool operator==(const QMat& a, const QMat& b) {
    return a.ncols_ == b.ncols_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t ncols_ = 0;
  std::vector<QVec> rows_;
};

struct RrefResult {
  QMat reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // strictly increasing column indices
};

// Unique reduced row echelon form: pivot entries 1, pivot columns cleared,
// zero rows at the bottom.
RrefResult rref(const QMat& m);

std::size_t rank(const QMat& m);

// RREF-canonical basis of {x : Mx = 0}, one basis vector per row.
// Row count is ncols - rank.
QMat kernel(const QMat& m);

struct AffineSolution {
  QVec particular;         // free variables set to 0 under RREF pivoting
  QMat homogeneous_basis;  // kernel(A)
};

// Solves A x = b. Inconsistency is an absent value, not an error.
std::optional<AffineSolution> solve_affine(const QMat& a, const QVec& b);

// RREF-canonical basis of the span of all rows of all inputs.
QMat subspace_sum(std::span<const QMat> bases);
QMat subspace_sum(const QMat& a, const QMat& b);

// RREF-canonical basis of the orthogonal complement under the standard dot
// product; dim(V) + dim(perp V) = ambient_dim.
QMat orthogonal_complement(const QMat& basis, std::size_t ambient_dim);

// Drops zero rows and returns the RREF basis of the row span.
QMat row_basis(const QMat& m);

}  // namespace sg
