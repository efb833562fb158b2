#include "sg/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace sg {

QMat::QMat(std::vector<QVec> rows) : rows_(std::move(rows)) {
  if (!rows_.empty()) {
    ncols_ = rows_[0].size();
    for (const auto& r : rows_)
      if (r.size() != ncols_) throw std::invalid_argument("QMat: ragged rows");
  }
}

QMat QMat::identity(std::size_t n) {
  QMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

void QMat::append_row(QVec row) {
  if (rows_.empty())
    ncols_ = row.size();
  else if (row.size() != ncols_)
    throw std::invalid_argument("QMat::append_row: width mismatch");
  rows_.push_back(std::move(row));
}

void QMat::append_rows(const QMat& other) {
  for (const auto& r : other.rows()) append_row(r);
}

QMat QMat::transposed() const {
  QMat t(ncols_, nrows());
  for (std::size_t i = 0; i < nrows(); ++i)
    for (std::size_t j = 0; j < ncols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

QVec QMat::mul_vec(const QVec& x) const {
  if (x.size() != ncols_) throw std::invalid_argument("mul_vec: dimension mismatch");
  QVec y(nrows(), Rat(0));
  for (std::size_t i = 0; i < nrows(); ++i) y[i] = dot(rows_[i], x);
  return y;
}

RrefResult rref(const QMat& m) {
  RrefResult res;
  res.reduced = m;
  QMat& r = res.reduced;
  const std::size_t nr = r.nrows(), nc = r.ncols();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < nc && lead < nr; ++col) {
    std::size_t piv = lead;
    while (piv < nr && r.at(piv, col) == 0) ++piv;
    if (piv == nr) continue;
    std::swap(r.row(piv), r.row(lead));
    const Rat inv = 1 / r.at(lead, col);
    for (std::size_t j = col; j < nc; ++j) r.at(lead, j) *= inv;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == lead || r.at(i, col) == 0) continue;
      const Rat f = r.at(i, col);
      for (std::size_t j = col; j < nc; ++j) r.at(i, j) -= f * r.at(lead, j);
    }
    res.pivots.push_back(col);
    ++lead;
  }
  res.rank = res.pivots.size();
  return res;
}

std::size_t rank(const QMat& m) { return rref(m).rank; }

QMat kernel(const QMat& m) {
  const auto r = rref(m);
  const std::size_t nc = m.ncols();
  std::vector<bool> is_pivot(nc, false);
  for (auto p : r.pivots) is_pivot[p] = true;

  QMat basis;
  for (std::size_t free = 0; free < nc; ++free) {
    if (is_pivot[free]) continue;
    QVec v = zero_vec(nc);
    v[free] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced.at(i, free);
    basis.append_row(std::move(v));
  }
  if (basis.empty()) return QMat(0, nc);
  return rref(basis).reduced;
}

std::optional<AffineSolution> solve_affine(const QMat& a, const QVec& b) {
  if (b.size() != a.nrows()) throw std::invalid_argument("solve_affine: rhs size mismatch");
  // augment with b as the last column
  QMat wide(a.nrows(), a.ncols() + 1);
  for (std::size_t i = 0; i < a.nrows(); ++i) {
    for (std::size_t j = 0; j < a.ncols(); ++j) wide.at(i, j) = a.at(i, j);
    wide.at(i, a.ncols()) = b[i];
  }
  const auto r = rref(wide);
  for (auto p : r.pivots)
    if (p == a.ncols()) return std::nullopt;  // inconsistent

  AffineSolution sol;
  sol.particular = zero_vec(a.ncols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    sol.particular[r.pivots[i]] = r.reduced.at(i, a.ncols());
  sol.homogeneous_basis = kernel(a);
  return sol;
}

QMat subspace_sum(std::span<const QMat> bases) {
  QMat stacked;
  std::size_t ambient = 0;
  for (const auto& b : bases) {
    if (b.ncols() > 0) ambient = b.ncols();
  }
  for (const auto& b : bases) {
    if (b.ncols() != ambient && !(b.nrows() == 0 && b.ncols() == 0))
      throw std::invalid_argument("subspace_sum: ambient dimension mismatch");
    stacked.append_rows(b);
  }
  if (stacked.empty()) return QMat(0, ambient);
  return row_basis(stacked);
}

QMat subspace_sum(const QMat& a, const QMat& b) {
  const QMat arr[] = {a, b};
  return subspace_sum(std::span<const QMat>(arr, 2));
}

QMat orthogonal_complement(const QMat& basis, std::size_t ambient_dim) {
  if (basis.empty()) return QMat::identity(ambient_dim);
  if (basis.ncols() != ambient_dim)
    throw std::invalid_argument("orthogonal_complement: ambient dimension mismatch");
  return kernel(basis);
}

QMat row_basis(const QMat& m) {
  const auto r = rref(m);
  QMat out(0, m.ncols());
  for (std::size_t i = 0; i < r.rank; ++i) out.append_row(r.reduced.row(i));
  return out;
}

}  // namespace sg
