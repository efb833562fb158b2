#pragma once

#include <random>
#include <vector>

#include "sg/linalg.hpp"

namespace sg::testing {

// Determinant by cofactor expansion; deliberately independent of rref.
inline Rat det_minor(const QMat& m) {
  const std::size_t n = m.nrows();
  if (n == 0) return Rat(1);
  if (n == 1) return m.at(0, 0);
  Rat acc(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j) == 0) continue;
    QMat sub(0, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      QVec row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m.at(i, k));
      sub.append_row(std::move(row));
    }
    const Rat term = m.at(0, j) * det_minor(sub);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

// Rank as the largest k with a nonzero k x k minor, by exhaustive enumeration.
inline std::size_t rank_by_minors(const QMat& m) {
  const std::size_t nr = m.nrows(), nc = m.ncols();
  const std::size_t kmax = nr < nc ? nr : nc;
  for (std::size_t k = kmax; k >= 1; --k) {
    std::vector<std::size_t> ri(k), ci(k);
    const auto next = [](std::vector<std::size_t>& idx, std::size_t n) {
      std::size_t i = idx.size();
      while (i > 0 && idx[i - 1] == n - idx.size() + i - 1) --i;
      if (i == 0) return false;
      ++idx[i - 1];
      for (std::size_t j = i; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
      return true;
    };
    for (std::size_t i = 0; i < k; ++i) ri[i] = i;
    do {
      for (std::size_t i = 0; i < k; ++i) ci[i] = i;
      do {
        QMat sub(0, k);
        for (auto r : ri) {
          QVec row;
          for (auto c : ci) row.push_back(m.at(r, c));
          sub.append_row(std::move(row));
        }
        if (det_minor(sub) != 0) return k;
      } while (next(ci, nc));
    } while (next(ri, nr));
  }
  return 0;
}

inline QMat random_mat(std::mt19937_64& rng, std::size_t nr, std::size_t nc,
                       long bound = 5) {
  QMat m(nr, nc);
  const std::uint64_t span = static_cast<std::uint64_t>(2 * bound + 1);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j)
      m.at(i, j) = make_rat(static_cast<long>(rng() % span) - bound);
  return m;
}

inline QVec random_vec(std::mt19937_64& rng, std::size_t n, long bound = 5) {
  QVec v(n);
  const std::uint64_t span = static_cast<std::uint64_t>(2 * bound + 1);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = make_rat(static_cast<long>(rng() % span) - bound);
  return v;
}

}  // namespace sg::testing
