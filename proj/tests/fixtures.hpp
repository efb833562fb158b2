#pragma once

#include <random>

#include "sg/verify.hpp"
#include "test_helpers.hpp"

namespace sg::testing {

struct CentralFixture {
  LineFamily family;
  HullArrangement arr;
  AffineSubspace expected_transversal;

  CentralFixture()
      : family{}, arr{}, expected_transversal(AffineSubspace::point(QVec{Rat(0)})) {}
};

inline AffineSubspace transform_flat(const QMat& t, const AffineSubspace& w) {
  QMat dirs(0, w.ambient_dim());
  for (const auto& r : w.dirs().rows()) dirs.append_row(t.mul_vec(r));
  return AffineSubspace(w.ambient_dim(), t.mul_vec(w.base()), dirs);
}

inline QMat random_invertible(std::mt19937_64& rng, std::size_t n) {
  while (true) {
    const QMat t = random_mat(rng, n, n, 3);
    if (rank(t) == n) return t;
  }
}

// Three pairwise-skew lines in the coordinate 2-planes through the x4 axis of
// Q^4, with the three coordinate hyperplanes through the origin as hand-built
// hulls. The transversal is the image of the x4 axis.
inline CentralFixture central_fixture_q4(std::mt19937_64& rng) {
  long c[3];
  c[0] = static_cast<long>(rng() % 7);
  do c[1] = static_cast<long>(rng() % 7);
  while (c[1] == c[0]);
  do c[2] = static_cast<long>(rng() % 7);
  while (c[2] == c[0] || c[2] == c[1]);

  const auto unit = [](std::size_t i) {
    QVec v = zero_vec(4);
    v[i] = 1;
    return v;
  };
  const auto line = [&](std::size_t axis, long ci) {
    QVec dir = zero_vec(4);
    dir[axis] = ci;
    dir[3] = 1;
    return AffineSubspace(4, unit(axis), QMat::from_row(dir));
  };

  CentralFixture f;
  f.family.ambient_dim = 4;
  f.family.member_dim = 1;
  // L1 in {x1=x2=0}, L2 in {x1=x3=0}, L3 in {x2=x3=0}
  f.family.members = {line(2, c[0]), line(1, c[1]), line(0, c[2])};

  const auto hull = [&](std::size_t missing) {
    QMat dirs(0, 4);
    for (std::size_t i = 0; i < 4; ++i)
      if (i != missing) dirs.append_row(unit(i));
    return AffineSubspace::linear(4, dirs);
  };
  f.arr.hulls = {hull(0), hull(1), hull(2)};  // x1=0, x2=0, x3=0
  f.arr.lines_per_hull = {{0, 1}, {0, 2}, {1, 2}};
  f.arr.hulls_per_line = {{0, 1}, {0, 2}, {1, 2}};
  f.expected_transversal = AffineSubspace::linear(4, QMat::from_row(unit(3)));

  const QMat t = random_invertible(rng, 4);
  for (auto& m : f.family.members) m = transform_flat(t, m);
  for (auto& h : f.arr.hulls) h = transform_flat(t, h);
  f.expected_transversal = transform_flat(t, f.expected_transversal);
  return f;
}

// Four lines and three 3-dim linear hulls in Q^5 whose normal spaces sum to a
// 4-dim space; the transversal is the image of the x5 axis.
inline CentralFixture central_fixture_q5(std::mt19937_64& rng) {
  long c[4];
  c[0] = static_cast<long>(rng() % 9);
  for (int i = 1; i < 4; ++i) {
    bool fresh = false;
    while (!fresh) {
      c[i] = static_cast<long>(rng() % 9);
      fresh = true;
      for (int j = 0; j < i; ++j)
        if (c[i] == c[j]) fresh = false;
    }
  }

  const auto unit = [](std::size_t i) {
    QVec v = zero_vec(5);
    v[i] = 1;
    return v;
  };
  const auto line = [&](std::size_t axis, long ci) {
    QVec dir = zero_vec(5);
    dir[axis] = ci;
    dir[4] = 1;
    return AffineSubspace(5, unit(axis), QMat::from_row(dir));
  };
  const auto span_of = [&](std::vector<std::size_t> axes) {
    QMat dirs(0, 5);
    for (auto a : axes) dirs.append_row(unit(a));
    return AffineSubspace::linear(5, dirs);
  };

  CentralFixture f;
  f.family.ambient_dim = 5;
  f.family.member_dim = 1;
  // lines in span{e4,e5}, span{e3,e5}, span{e2,e5}, span{e1,e5}
  f.family.members = {line(3, c[0]), line(2, c[1]), line(1, c[2]), line(0, c[3])};
  f.arr.hulls = {span_of({2, 3, 4}), span_of({1, 3, 4}), span_of({0, 2, 4})};
  f.arr.lines_per_hull = {{0, 1}, {0, 2}, {1, 3}};
  f.arr.hulls_per_line = {{0, 1}, {0, 2}, {1}, {2}};
  f.expected_transversal = AffineSubspace::linear(5, QMat::from_row(unit(4)));

  const QMat t = random_invertible(rng, 5);
  for (auto& m : f.family.members) m = transform_flat(t, m);
  for (auto& h : f.arr.hulls) h = transform_flat(t, h);
  f.expected_transversal = transform_flat(t, f.expected_transversal);
  return f;
}

}  // namespace sg::testing
