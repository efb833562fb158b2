#pragma once

#include <optional>

#include "sg/linalg.hpp"

namespace sg {

// An affine flat of Q^l in canonical base-point + direction-basis form.
// The direction basis is the RREF basis of the direction span; the base point
// is the unique point of the flat whose pivot coordinates are all zero.
// Two AffineSubspace values describe the same flat iff they compare equal.
class AffineSubspace {
 public:
  // Canonicalizes an arbitrary parameterization.
  AffineSubspace(std::size_t ambient_dim, QVec base, QMat dirs);

  static AffineSubspace point(QVec p);
  // The linear subspace spanned by the rows of dirs.
  static AffineSubspace linear(std::size_t ambient_dim, QMat dirs);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return dirs_.nrows(); }
  const QVec& base() const { return base_; }
  const QMat& dirs() const { return dirs_; }

  // Equation form {x : N x = c} with N the complement of the direction span.
  QMat normals() const;
  QVec offsets(const QMat& normals) const;

  friend bool operator==(const AffineSubspace& a, const AffineSubspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.base_ == b.base_ && a.dirs_ == b.dirs_;
  }

 private:
  std::size_t ambient_dim_;
  QVec base_;
  QMat dirs_;
};

bool contains_point(const AffineSubspace& w, const QVec& p);
bool contains_flat(const AffineSubspace& outer, const AffineSubspace& inner);

// Set intersection; absent when empty.
std::optional<AffineSubspace> intersect(const AffineSubspace& w1, const AffineSubspace& w2);

// Smallest flat containing both inputs.
AffineSubspace affine_hull(const AffineSubspace& w1, const AffineSubspace& w2);

// dim(hull) = dim W1 + dim W2 + 1.
bool is_skew(const AffineSubspace& w1, const AffineSubspace& w2);

// Both inputs must be lines; true iff the hull has dimension at most 2.
bool lines_coplanar(const AffineSubspace& l1, const AffineSubspace& l2);

bool passes_through_origin(const AffineSubspace& w);

AffineSubspace translate(const AffineSubspace& w, const QVec& offset);

// Image of the direction space of W under orthogonal projection onto
// perp(L0), as an RREF basis. L0 must be a line through the origin whose
// direction lies in W's direction span.
QMat project_along(const AffineSubspace& w, const AffineSubspace& l0);

}  // namespace sg
