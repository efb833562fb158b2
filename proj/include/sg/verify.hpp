#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sg/family.hpp"

namespace sg {

// A claimed geometric identity failed on an instance. Raised instead of
// silently correcting, e.g. when dim(V_1+V_b1+V_b2) != l-1.
struct TheoremViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Deduplicated pair hulls plus both incidence maps: which members each hull
// contains and which hulls each member lies in. Hull order is the order of
// the first discovering pair, pairs scanned lexicographically.
struct HullArrangement {
  std::vector<AffineSubspace> hulls;
  std::vector<std::vector<std::size_t>> lines_per_hull;  // member indices, ascending
  std::vector<std::vector<std::size_t>> hulls_per_line;  // hull indices, ascending
};

struct SkewCheck {
  bool ok = false;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // first offending pair
};

SkewCheck pairwise_skew(const LineFamily& family);

// Requires pairwise_skew; throws std::invalid_argument otherwise.
HullArrangement build_hulls(const LineFamily& family);

struct DesignCheck {
  bool ok = false;
  // first pair whose hull contains exactly the two of them
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

DesignCheck is_sg_design(const LineFamily& family);
DesignCheck is_sg_design(const LineFamily& family, const HullArrangement& arr);

// Hull count per member. Throws TheoremViolation if the dichotomy fails:
// either a single hull, or every member in at least three.
std::vector<std::size_t> hull_multiplicities(const HullArrangement& arr);

// The intersection flat of all hulls, absent when empty.
std::optional<AffineSubspace> is_central(const HullArrangement& arr);

// Transversal extraction: pick the first hull H with >= 2 members and its
// first two members La, Lb; pick another hull through La and another through
// Lb; L = perp(perp(H) + perp(Hb1) + perp(Hb2)). Requires the arrangement
// translated so the common point is the origin. Throws TheoremViolation when
// the perp sum does not have dimension l-1; the postconditions (L inside
// every hull, coplanar with and distinct from every member) are asserted.
AffineSubspace extract_transversal(const HullArrangement& arr, const LineFamily& family);

// P_i = hull(L, L_i) projected along L: one projective point (canonical
// single-row basis of a 1-dim subspace of perp(L)) per member. All outputs
// distinct for a skew family.
std::vector<QVec> project_family(const LineFamily& family, const AffineSubspace& l);

// Projective points are canonical RREF rows of 1-dim subspaces.
bool is_sgc(const std::vector<QVec>& points);
std::optional<std::pair<std::size_t, std::size_t>> find_ordinary_line(
    const std::vector<QVec>& points);
bool are_collinear(const std::vector<QVec>& points);

// Smallest flat containing every member.
AffineSubspace min_enclosing_flat(const LineFamily& family);

struct TheoremReport {
  bool skew = false;
  bool is_design = false;
  std::size_t n_hulls = 0;
  bool central = false;
  std::optional<QVec> common_point;
  bool all_in_3d = false;  // enclosing flat dim <= 2k+1
  std::optional<AffineSubspace> transversal;
  std::optional<bool> projected_collinear;
  bool consistent = false;  // central <=> all_in_3d
  bool small_family_ok = true;       // n <= 6 designs have a single hull
  bool multiplicity_ok = true;  // single hull or all multiplicities >= 3
  std::vector<std::string> notes;
};

// Runs the whole pipeline; failures are recorded in the report, not thrown.
TheoremReport check_main_theorem(const LineFamily& family);

}  // namespace sg
