#pragma once

#include <vector>

#include "sg/affine.hpp"

namespace sg {

// An ordered family of mutually skew affine subspaces of equal dimension in a
// common ambient space (k=1: skew lines, k=2: the (2,5) case).
struct LineFamily {
  std::size_t ambient_dim = 0;
  std::size_t member_dim = 1;
  std::vector<AffineSubspace> members;
};

LineFamily translate(const LineFamily& family, const QVec& offset);

}  // namespace sg
