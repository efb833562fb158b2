#include "sg/construct.hpp"

#include <algorithm>
#include <set>

namespace sg {

namespace {

// Enumerates k-subsets of {0..n-1} in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!f(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

long draw_coeff(std::mt19937_64& rng, long bound) {
  // modulo reduction keeps the stream identical across standard libraries
  const std::uint64_t span = static_cast<std::uint64_t>(2 * bound + 1);
  return static_cast<long>(rng() % span) - bound;
}

}  // namespace

Hyperplane make_hyperplane(QVec normal, Rat offset) {
  std::size_t first = normal.size();
  for (std::size_t i = 0; i < normal.size(); ++i) {
    if (normal[i] != 0) {
      first = i;
      break;
    }
  }
  if (first == normal.size())
    throw std::invalid_argument("make_hyperplane: zero normal vector");
  const Rat scale = normal[first];
  for (auto& x : normal) x /= scale;
  offset /= scale;
  return Hyperplane{std::move(normal), std::move(offset)};
}

AffineSubspace Hyperplane::flat() const {
  const auto sol = solve_affine(QMat::from_row(normal), QVec{offset});
  // a hyperplane is never empty
  return AffineSubspace(normal.size(), sol->particular, sol->homogeneous_basis);
}

std::vector<Hyperplane> random_hyperplanes(std::size_t l, std::size_t count,
                                           long coeff_bound, std::mt19937_64& rng) {
  std::vector<Hyperplane> out;
  out.reserve(count);
  while (out.size() < count) {
    QVec normal(l);
    bool nonzero = false;
    for (std::size_t j = 0; j < l; ++j) {
      normal[j] = make_rat(draw_coeff(rng, coeff_bound));
      if (normal[j] != 0) nonzero = true;
    }
    const Rat offset = make_rat(draw_coeff(rng, coeff_bound));
    if (!nonzero) continue;
    out.push_back(make_hyperplane(std::move(normal), offset));
  }
  return out;
}

std::vector<Hyperplane> random_hyperplanes(std::size_t l, std::size_t count,
                                           const GenSpec& spec) {
  if (l < 2 || count < 1)
    throw std::invalid_argument("random_hyperplanes: need l >= 2 and count >= 1");
  std::mt19937_64 rng(spec.seed);
  return random_hyperplanes(l, count, spec.coeff_bound, rng);
}

bool is_generic(const std::vector<Hyperplane>& hyperplanes) {
  for (const auto& h : hyperplanes)
    if (h.normal.size() != 4)
      throw std::invalid_argument("is_generic: predicate is specific to Q^4");
  const std::size_t n = hyperplanes.size();
  bool ok = true;
  if (n >= 4) {
    for_each_subset(n, 4, [&](const std::vector<std::size_t>& idx) {
      QMat normals(0, 4);
      for (auto i : idx) normals.append_row(hyperplanes[i].normal);
      if (rank(normals) != 4) ok = false;
      return ok;
    });
  }
  if (ok && n >= 5) {
    for_each_subset(n, 5, [&](const std::vector<std::size_t>& idx) {
      QMat system(0, 4);
      QVec rhs;
      for (auto i : idx) {
        system.append_row(hyperplanes[i].normal);
        rhs.push_back(hyperplanes[i].offset);
      }
      if (solve_affine(system, rhs)) ok = false;
      return ok;
    });
  }
  return ok;
}

std::vector<AffineSubspace> fano_lines_from_hyperplanes(const std::vector<Hyperplane>& h) {
  if (h.size() != 7)
    throw std::invalid_argument("fano_lines_from_hyperplanes: need exactly 7 hyperplanes");
  const IncidenceDesign fano = fano_plane();
  std::vector<AffineSubspace> lines;
  lines.reserve(7);
  for (int point = 1; point <= 7; ++point) {
    QMat system(0, 4);
    QVec rhs;
    for (int b : blocks_through(fano, point)) {
      system.append_row(h[static_cast<std::size_t>(b) - 1].normal);
      rhs.push_back(h[static_cast<std::size_t>(b) - 1].offset);
    }
    const auto sol = solve_affine(system, rhs);
    if (!sol || sol->homogeneous_basis.nrows() != 1)
      throw ConstructionError("triple intersection for L_" + std::to_string(point) +
                              " is not a line");
    lines.emplace_back(4, sol->particular, sol->homogeneous_basis);
  }
  return lines;
}

LineFamily gen_fano_13(const GenSpec& spec) {
  const IncidenceDesign fano = fano_plane();
  std::mt19937_64 rng(spec.seed);
  for (int attempt = 0; attempt < spec.max_retries; ++attempt) {
    const auto hyperplanes = random_hyperplanes(4, 7, spec.coeff_bound, rng);
    if (!is_generic(hyperplanes)) continue;

    std::vector<AffineSubspace> lines;
    try {
      lines = fano_lines_from_hyperplanes(hyperplanes);
    } catch (const ConstructionError&) {
      continue;
    }

    bool ok = true;
    for (std::size_t i = 0; i < 7 && ok; ++i)
      for (std::size_t j = i + 1; j < 7 && ok; ++j)
        if (!is_skew(lines[i], lines[j])) ok = false;
    if (!ok) continue;

    // each block's pair hulls must all equal the block hyperplane
    for (std::size_t b = 0; b < 7 && ok; ++b) {
      const AffineSubspace hull_flat = hyperplanes[b].flat();
      const auto& blk = fano.blocks[b];
      for (std::size_t p = 0; p < 3 && ok; ++p)
        for (std::size_t q = p + 1; q < 3 && ok; ++q) {
          const auto& li = lines[static_cast<std::size_t>(blk[p]) - 1];
          const auto& lj = lines[static_cast<std::size_t>(blk[q]) - 1];
          if (!(affine_hull(li, lj) == hull_flat)) ok = false;
        }
    }
    if (!ok) continue;

    return LineFamily{4, 1, std::move(lines)};
  }
  throw RetriesExhausted("gen_fano_13: no generic arrangement found within " +
                         std::to_string(spec.max_retries) + " retries");
}

AffineSubspace cone_over_origin(const AffineSubspace& w) {
  const std::size_t d = w.ambient_dim();
  if (d < 1 || w.base()[d - 1] != 1)
    throw std::invalid_argument("cone_over_origin: base must lie in {last coord = 1}");
  for (const auto& r : w.dirs().rows())
    if (r[d - 1] != 0)
      throw std::invalid_argument("cone_over_origin: directions must have last coord 0");
  QMat dirs = w.dirs();
  dirs.append_row(w.base());
  return AffineSubspace::linear(d, std::move(dirs));
}

std::vector<AffineSubspace> gen_planes_r5(const GenSpec& spec) {
  const LineFamily fam = gen_fano_13(spec);
  std::vector<AffineSubspace> planes;
  planes.reserve(7);
  for (const auto& line : fam.members) {
    QVec base = line.base();
    base.push_back(make_rat(1));
    QMat dirs(0, 5);
    for (const auto& r : line.dirs().rows()) {
      QVec d = r;
      d.push_back(make_rat(0));
      dirs.append_row(std::move(d));
    }
    planes.push_back(cone_over_origin(AffineSubspace(5, std::move(base), std::move(dirs))));
  }

  const AffineSubspace origin = AffineSubspace::point(zero_vec(5));
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = i + 1; j < 7; ++j) {
      const auto meet = intersect(planes[i], planes[j]);
      if (!meet || !(*meet == origin))
        throw ConstructionError("gen_planes_r5: planes do not meet only at the origin");
    }
  const IncidenceDesign fano = fano_plane();
  for (const auto& blk : fano.blocks) {
    const auto& pi = planes[static_cast<std::size_t>(blk[0]) - 1];
    const auto& pj = planes[static_cast<std::size_t>(blk[1]) - 1];
    const auto& pk = planes[static_cast<std::size_t>(blk[2]) - 1];
    const QMat sum = subspace_sum(pi.dirs(), pj.dirs());
    if (sum.nrows() != 4)
      throw ConstructionError("gen_planes_r5: pair span is not 4-dimensional");
    if (!contains_flat(AffineSubspace::linear(5, sum), pk))
      throw ConstructionError("gen_planes_r5: block's third plane escapes the pair span");
  }
  QMat all(0, 5);
  for (const auto& p : planes) all.append_rows(p.dirs());
  if (rank(all) != 5)
    throw ConstructionError("gen_planes_r5: planes do not span Q^5");
  return planes;
}

std::vector<Rat> default_t_values() {
  std::vector<Rat> t;
  for (long i = 1; i <= 7; ++i) t.push_back(make_rat(i));
  return t;
}

LineFamily gen_25(const GenSpec& spec, const std::vector<Rat>& t) {
  if (t.size() != 7) throw std::invalid_argument("gen_25: need exactly 7 t values");
  for (std::size_t i = 0; i < 7; ++i) {
    if (t[i] == 0) throw std::invalid_argument("gen_25: t values must be nonzero");
    for (std::size_t j = i + 1; j < 7; ++j)
      if (t[i] == t[j]) throw std::invalid_argument("gen_25: t values must be distinct");
  }

  const IncidenceDesign fano = fano_plane();
  for (int attempt = 0; attempt < spec.max_retries; ++attempt) {
    GenSpec attempt_spec = spec;
    attempt_spec.seed = spec.seed + static_cast<std::uint64_t>(attempt);
    const auto planes = gen_planes_r5(attempt_spec);

    // C_i: lift P_i through the projection dropping the 6th coordinate
    std::vector<AffineSubspace> cones;
    std::vector<AffineSubspace> members;
    cones.reserve(7);
    members.reserve(7);
    for (std::size_t i = 0; i < 7; ++i) {
      QMat cdirs(0, 6);
      for (const auto& r : planes[i].dirs().rows()) {
        QVec d = r;
        d.push_back(make_rat(0));
        cdirs.append_row(std::move(d));
      }
      QVec e6 = zero_vec(6);
      e6[5] = 1;
      cdirs.append_row(e6);
      cones.push_back(AffineSubspace::linear(6, cdirs));

      // A_i: the RREF rows of C_i's direction space with pivot != 6, based
      // at t_i e6 so that A_i meets the z6 axis exactly at that point
      QMat adirs(0, 6);
      for (const auto& r : cones[i].dirs().rows()) {
        std::size_t pivot = 0;
        while (pivot < 6 && r[pivot] == 0) ++pivot;
        if (pivot != 5) adirs.append_row(r);
      }
      if (adirs.nrows() != 2)
        throw ConstructionError("gen_25: cone basis does not split as expected");
      QVec base = zero_vec(6);
      base[5] = t[i];
      members.emplace_back(6, std::move(base), std::move(adirs));
    }

    bool ok = true;
    for (std::size_t i = 0; i < 7 && ok; ++i) {
      for (std::size_t j = i + 1; j < 7 && ok; ++j) {
        const AffineSubspace hull = affine_hull(members[i], members[j]);
        if (hull.dim() != 5 || !passes_through_origin(hull)) ok = false;
        const QMat pair_sum = subspace_sum(cones[i].dirs(), cones[j].dirs());
        if (ok && !(hull == AffineSubspace::linear(6, pair_sum))) ok = false;
      }
    }
    for (const auto& blk : fano.blocks) {
      if (!ok) break;
      const auto& ai = members[static_cast<std::size_t>(blk[0]) - 1];
      const auto& aj = members[static_cast<std::size_t>(blk[1]) - 1];
      const auto& ak = members[static_cast<std::size_t>(blk[2]) - 1];
      if (!contains_flat(affine_hull(ai, aj), ak)) ok = false;
    }
    if (ok) {
      QMat all(0, 6);
      for (const auto& c : cones) all.append_rows(c.dirs());
      if (rank(all) != 6) ok = false;
    }
    if (!ok) continue;
    return LineFamily{6, 2, std::move(members)};
  }
  throw RetriesExhausted("gen_25: verification failed for all seeds tried");
}

}  // namespace sg
