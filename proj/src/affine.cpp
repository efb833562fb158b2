#include "sg/affine.hpp"

#include <stdexcept>
#include <utility>

namespace sg {

namespace {

void require_same_ambient(const AffineSubspace& a, const AffineSubspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("ambient dimension mismatch");
}

}  // namespace

AffineSubspace::AffineSubspace(std::size_t ambient_dim, QVec base, QMat dirs)
    : ambient_dim_(ambient_dim), base_(std::move(base)) {
  if (base_.size() != ambient_dim_)
    throw std::invalid_argument("AffineSubspace: base dimension mismatch");
  if (!dirs.empty() && dirs.ncols() != ambient_dim_)
    throw std::invalid_argument("AffineSubspace: direction dimension mismatch");
  const auto r = rref(dirs.empty() ? QMat(0, ambient_dim_) : dirs);
  dirs_ = QMat(0, ambient_dim_);
  for (std::size_t i = 0; i < r.rank; ++i) dirs_.append_row(r.reduced.row(i));
  // Zero the pivot coordinates of the base point: with RREF directions the
  // rows have 1 at their pivot and 0 at every other pivot, so one sweep
  // reaches the unique representative.
  for (std::size_t i = 0; i < r.rank; ++i) {
    const Rat f = base_[r.pivots[i]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < ambient_dim_; ++j) base_[j] -= f * dirs_.at(i, j);
  }
}

AffineSubspace AffineSubspace::point(QVec p) {
  const std::size_t d = p.size();
  return AffineSubspace(d, std::move(p), QMat(0, d));
}

AffineSubspace AffineSubspace::linear(std::size_t ambient_dim, QMat dirs) {
  return AffineSubspace(ambient_dim, zero_vec(ambient_dim), std::move(dirs));
}

QMat AffineSubspace::normals() const { return orthogonal_complement(dirs_, ambient_dim_); }

QVec AffineSubspace::offsets(const QMat& n) const { return n.mul_vec(base_); }

bool contains_point(const AffineSubspace& w, const QVec& p) {
  if (p.size() != w.ambient_dim())
    throw std::invalid_argument("contains_point: ambient dimension mismatch");
  const QVec diff = vec_sub(p, w.base());
  if (is_zero_vec(diff)) return true;
  QMat stacked = w.dirs();
  stacked.append_row(diff);
  return rank(stacked) == w.dim();
}

bool contains_flat(const AffineSubspace& outer, const AffineSubspace& inner) {
  require_same_ambient(outer, inner);
  if (!contains_point(outer, inner.base())) return false;
  QMat stacked = outer.dirs();
  stacked.append_rows(inner.dirs());
  return rank(stacked) == outer.dim();
}

std::optional<AffineSubspace> intersect(const AffineSubspace& w1, const AffineSubspace& w2) {
  require_same_ambient(w1, w2);
  const QMat n1 = w1.normals();
  const QMat n2 = w2.normals();
  QMat system = n1;
  system.append_rows(n2);
  QVec rhs = w1.offsets(n1);
  const QVec rhs2 = w2.offsets(n2);
  rhs.insert(rhs.end(), rhs2.begin(), rhs2.end());
  const auto sol = solve_affine(system, rhs);
  if (!sol) return std::nullopt;
  return AffineSubspace(w1.ambient_dim(), sol->particular, sol->homogeneous_basis);
}

AffineSubspace affine_hull(const AffineSubspace& w1, const AffineSubspace& w2) {
  require_same_ambient(w1, w2);
  QMat dirs = w1.dirs();
  dirs.append_rows(w2.dirs());
  dirs.append_row(vec_sub(w2.base(), w1.base()));
  return AffineSubspace(w1.ambient_dim(), w1.base(), std::move(dirs));
}

bool is_skew(const AffineSubspace& w1, const AffineSubspace& w2) {
  return affine_hull(w1, w2).dim() == w1.dim() + w2.dim() + 1;
}

bool lines_coplanar(const AffineSubspace& l1, const AffineSubspace& l2) {
  if (l1.dim() != 1 || l2.dim() != 1)
    throw std::invalid_argument("lines_coplanar: inputs must be lines");
  return affine_hull(l1, l2).dim() <= 2;
}

bool passes_through_origin(const AffineSubspace& w) {
  return contains_point(w, zero_vec(w.ambient_dim()));
}

AffineSubspace translate(const AffineSubspace& w, const QVec& offset) {
  return AffineSubspace(w.ambient_dim(), vec_add(w.base(), offset), w.dirs());
}

QMat project_along(const AffineSubspace& w, const AffineSubspace& l0) {
  require_same_ambient(w, l0);
  if (l0.dim() != 1 || !passes_through_origin(l0))
    throw std::invalid_argument("project_along: L0 must be a line through the origin");
  if (!passes_through_origin(w))
    throw std::invalid_argument("project_along: W must be a linear subspace");
  const QVec& d = l0.dirs().row(0);
  if (!contains_flat(w, l0))
    throw std::invalid_argument("project_along: W does not contain L0");
  const Rat dd = dot(d, d);
  QMat image(0, w.ambient_dim());
  for (const auto& r : w.dirs().rows()) {
    const Rat f = dot(r, d) / dd;
    QVec proj(r.size());
    for (std::size_t j = 0; j < r.size(); ++j) proj[j] = r[j] - f * d[j];
    image.append_row(std::move(proj));
  }
  return row_basis(image);
}

}  // namespace sg
