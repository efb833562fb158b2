#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace sg {

// Abstract point/block incidence structure. Points are 1-based so the Fano
// fixtures read the same as the usual labeling L_1..L_7, H_1..H_7.
struct IncidenceDesign {
  int n_points = 0;
  std::vector<std::vector<int>> blocks;  // each block sorted ascending
};

// The 7-point projective plane PG(2,2):
// {1,2,3},{1,4,5},{1,6,7},{2,4,6},{2,5,7},{3,4,7},{3,5,6}.
IncidenceDesign fano_plane();

// 1-based indices of all blocks containing the point, ascending.
std::vector<int> blocks_through(const IncidenceDesign& design, int point);

struct PairCover {
  bool covered = false;
  std::optional<std::pair<int, int>> witness;  // first uncovered point pair
};

// True iff every unordered point pair lies in at least one block of size >= 3.
PairCover is_pairwise_covered(const IncidenceDesign& design);

}  // namespace sg
