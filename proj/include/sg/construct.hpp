#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "sg/family.hpp"
#include "sg/incidence.hpp"

namespace sg {

// The hyperplane {x : normal . x = offset}; canonical scaling puts the first
// nonzero normal entry at 1.
struct Hyperplane {
  QVec normal;
  Rat offset;

  AffineSubspace flat() const;
};

Hyperplane make_hyperplane(QVec normal, Rat offset);

struct GenSpec {
  std::uint64_t seed = 0;
  long coeff_bound = 10;  // integer coefficients drawn from [-bound, bound]
  int max_retries = 1000;
};

struct RetriesExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Deterministic draw of `count` integer-coefficient hyperplanes in Q^l.
// No genericity filtering; callers reject and redraw.
std::vector<Hyperplane> random_hyperplanes(std::size_t l, std::size_t count,
                                           const GenSpec& spec);
std::vector<Hyperplane> random_hyperplanes(std::size_t l, std::size_t count,
                                           long coeff_bound, std::mt19937_64& rng);

// Genericity for the l=4 construction: every 4 normals nonsingular and every
// 5 hyperplanes have empty intersection. Throws on ambient dim != 4.
bool is_generic(const std::vector<Hyperplane>& hyperplanes);

// Line i = intersection of the three hyperplanes whose Fano blocks contain
// point i. Throws ConstructionError when a triple does not meet in a line.
std::vector<AffineSubspace> fano_lines_from_hyperplanes(const std::vector<Hyperplane>& h);

// Retry loop over random arrangements in Q^4 until the seven derived lines
// form a (1,3)-representation of the Fano plane: arrangement generic,
// 21/21 pairs skew, and each Fano block's pair-hulls equal to the block's
// hyperplane. Throws RetriesExhausted.
LineFamily gen_fano_13(const GenSpec& spec);

// Cone over the origin of a flat in the slice {last coord = 1} of Q^{d+1}.
AffineSubspace cone_over_origin(const AffineSubspace& w);

// Seven 2-dim linear subspaces of Q^5 pairwise meeting only at the origin,
// obtained by coning a Fano line family placed in {z5 = 1}.
std::vector<AffineSubspace> gen_planes_r5(const GenSpec& spec);

std::vector<Rat> default_t_values();

// Seven mutually skew 2-dim affine flats in Q^6 whose pair hulls are linear
// and 5-dimensional: the (2,5)-representation of the Fano plane. t values
// must be pairwise distinct and nonzero (A_i meets the z6 axis at t_i e6).
LineFamily gen_25(const GenSpec& spec, const std::vector<Rat>& t = default_t_values());

}  // namespace sg
