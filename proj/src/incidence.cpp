#include "sg/incidence.hpp"

#include <algorithm>
#include <stdexcept>

namespace sg {

IncidenceDesign fano_plane() {
  return IncidenceDesign{
      7,
      {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}}};
}

std::vector<int> blocks_through(const IncidenceDesign& design, int point) {
  if (point < 1 || point > design.n_points)
    throw std::invalid_argument("blocks_through: point index out of range");
  std::vector<int> out;
  for (std::size_t b = 0; b < design.blocks.size(); ++b)
    if (std::binary_search(design.blocks[b].begin(), design.blocks[b].end(), point))
      out.push_back(static_cast<int>(b) + 1);
  return out;
}

PairCover is_pairwise_covered(const IncidenceDesign& design) {
  for (int p = 1; p <= design.n_points; ++p) {
    for (int q = p + 1; q <= design.n_points; ++q) {
      bool found = false;
      for (const auto& blk : design.blocks) {
        if (blk.size() < 3) continue;
        if (std::binary_search(blk.begin(), blk.end(), p) &&
            std::binary_search(blk.begin(), blk.end(), q)) {
          found = true;
          break;
        }
      }
      if (!found) return {false, std::make_pair(p, q)};
    }
  }
  return {true, std::nullopt};
}

}  // namespace sg
