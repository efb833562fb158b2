#include "sg/verify.hpp"

#include <algorithm>

namespace sg {

namespace {

QVec negated(const QVec& v) {
  QVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

std::size_t rank3(const QVec& a, const QVec& b, const QVec& c) {
  QMat m(0, a.size());
  m.append_row(a);
  m.append_row(b);
  m.append_row(c);
  return rank(m);
}

}  // namespace

SkewCheck pairwise_skew(const LineFamily& family) {
  const auto& m = family.members;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!is_skew(m[i], m[j])) return {false, std::make_pair(i, j)};
  return {true, std::nullopt};
}

HullArrangement build_hulls(const LineFamily& family) {
  const auto skew = pairwise_skew(family);
  if (!skew.ok)
    throw std::invalid_argument("build_hulls: members are not pairwise skew");

  HullArrangement arr;
  const auto& m = family.members;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      const AffineSubspace hull = affine_hull(m[i], m[j]);
      if (std::find(arr.hulls.begin(), arr.hulls.end(), hull) == arr.hulls.end())
        arr.hulls.push_back(hull);
    }
  }
  arr.lines_per_hull.resize(arr.hulls.size());
  arr.hulls_per_line.resize(m.size());
  for (std::size_t h = 0; h < arr.hulls.size(); ++h)
    for (std::size_t i = 0; i < m.size(); ++i)
      if (contains_flat(arr.hulls[h], m[i])) {
        arr.lines_per_hull[h].push_back(i);
        arr.hulls_per_line[i].push_back(h);
      }
  return arr;
}

DesignCheck is_sg_design(const LineFamily& family) {
  return is_sg_design(family, build_hulls(family));
}

DesignCheck is_sg_design(const LineFamily& family, const HullArrangement& arr) {
  const auto& m = family.members;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      const AffineSubspace hull = affine_hull(m[i], m[j]);
      const auto it = std::find(arr.hulls.begin(), arr.hulls.end(), hull);
      const std::size_t h = static_cast<std::size_t>(it - arr.hulls.begin());
      if (arr.lines_per_hull[h].size() < 3) return {false, std::make_pair(i, j)};
    }
  }
  return {true, std::nullopt};
}

std::vector<std::size_t> hull_multiplicities(const HullArrangement& arr) {
  std::vector<std::size_t> counts;
  counts.reserve(arr.hulls_per_line.size());
  for (const auto& hs : arr.hulls_per_line) counts.push_back(hs.size());
  if (arr.hulls.size() > 1)
    for (std::size_t i = 0; i < counts.size(); ++i)
      if (counts[i] < 3)
        throw TheoremViolation("multiplicity dichotomy fails: member " +
                               std::to_string(i) + " lies in only " +
                               std::to_string(counts[i]) + " hulls");
  return counts;
}

std::optional<AffineSubspace> is_central(const HullArrangement& arr) {
  if (arr.hulls.empty()) throw std::invalid_argument("is_central: no hulls");
  std::optional<AffineSubspace> meet = arr.hulls[0];
  for (std::size_t h = 1; h < arr.hulls.size(); ++h) {
    meet = intersect(*meet, arr.hulls[h]);
    if (!meet) return std::nullopt;
  }
  return meet;
}

AffineSubspace extract_transversal(const HullArrangement& arr, const LineFamily& family) {
  if (arr.hulls.size() < 2)
    throw std::invalid_argument("extract_transversal: need at least two hulls");
  const std::size_t l = family.ambient_dim;
  for (const auto& h : arr.hulls)
    if (!passes_through_origin(h))
      throw std::invalid_argument(
          "extract_transversal: hulls must pass through the origin (translate first)");

  std::size_t h0 = arr.hulls.size();
  for (std::size_t h = 0; h < arr.hulls.size(); ++h)
    if (arr.lines_per_hull[h].size() >= 2) {
      h0 = h;
      break;
    }
  if (h0 == arr.hulls.size())
    throw std::invalid_argument("extract_transversal: no hull with two members");
  const std::size_t ia = arr.lines_per_hull[h0][0];
  const std::size_t ib = arr.lines_per_hull[h0][1];

  const auto other_hull = [&](std::size_t member) {
    for (std::size_t h : arr.hulls_per_line[member])
      if (h != h0) return h;
    throw std::invalid_argument("extract_transversal: member lies in a single hull");
  };
  const std::size_t hb1 = other_hull(ia);
  const std::size_t hb2 = other_hull(ib);

  const QMat perps[] = {orthogonal_complement(arr.hulls[h0].dirs(), l),
                        orthogonal_complement(arr.hulls[hb1].dirs(), l),
                        orthogonal_complement(arr.hulls[hb2].dirs(), l)};
  const QMat v = subspace_sum(std::span<const QMat>(perps, 3));
  if (v.nrows() != l - 1)
    throw TheoremViolation("transversal claim fails: dim(V_1+V_b1+V_b2) = " +
                           std::to_string(v.nrows()) + ", expected " +
                           std::to_string(l - 1));
  const AffineSubspace line = AffineSubspace::linear(l, orthogonal_complement(v, l));

  for (const auto& h : arr.hulls)
    if (!contains_flat(h, line))
      throw TheoremViolation("transversal not contained in every hull");
  for (const auto& m : family.members) {
    if (m == line) throw TheoremViolation("transversal coincides with a member");
    if (affine_hull(line, m).dim() > line.dim() + m.dim())
      throw TheoremViolation("transversal not coplanar with a member");
  }
  return line;
}

std::vector<QVec> project_family(const LineFamily& family, const AffineSubspace& l) {
  if (l.dim() != 1 || !passes_through_origin(l))
    throw std::invalid_argument("project_family: L must be a line through the origin");
  std::vector<QVec> points;
  points.reserve(family.members.size());
  for (const auto& m : family.members) {
    if (m == l) throw std::invalid_argument("project_family: a member equals L");
    const AffineSubspace plane = affine_hull(l, m);
    if (plane.dim() != 2)
      throw std::invalid_argument("project_family: member not coplanar with L");
    const QMat image = project_along(plane, l);
    if (image.nrows() != 1)
      throw std::invalid_argument("project_family: projected image is not a point");
    points.push_back(image.row(0));
  }
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        throw std::invalid_argument("project_family: members share a projection plane");
  return points;
}

std::optional<std::pair<std::size_t, std::size_t>> find_ordinary_line(
    const std::vector<QVec>& points) {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        throw std::invalid_argument("find_ordinary_line: duplicate projective points");
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      bool has_third = false;
      for (std::size_t k = 0; k < points.size() && !has_third; ++k) {
        if (k == i || k == j) continue;
        if (rank3(points[i], points[j], points[k]) == 2) has_third = true;
      }
      if (!has_third) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

bool is_sgc(const std::vector<QVec>& points) { return !find_ordinary_line(points); }

bool are_collinear(const std::vector<QVec>& points) {
  QMat m(0, points.empty() ? 0 : points[0].size());
  for (const auto& p : points) m.append_row(p);
  return points.empty() || rank(m) <= 2;
}

AffineSubspace min_enclosing_flat(const LineFamily& family) {
  if (family.members.empty())
    throw std::invalid_argument("min_enclosing_flat: empty family");
  AffineSubspace flat = family.members[0];
  for (std::size_t i = 1; i < family.members.size(); ++i)
    flat = affine_hull(flat, family.members[i]);
  return flat;
}

TheoremReport check_main_theorem(const LineFamily& family) {
  TheoremReport r;
  if (family.members.empty()) {
    r.notes.push_back("empty family");
    return r;
  }
  const std::size_t k = family.member_dim;
  const std::size_t hull_dim = 2 * k + 1;

  r.all_in_3d = min_enclosing_flat(family).dim() <= hull_dim;

  const auto skew = pairwise_skew(family);
  r.skew = skew.ok;
  if (!skew.ok) {
    r.notes.push_back("members " + std::to_string(skew.witness->first) + " and " +
                      std::to_string(skew.witness->second) + " are not skew");
    r.consistent = true;  // vacuous: not an SG design
    return r;
  }

  const HullArrangement arr = build_hulls(family);
  r.n_hulls = arr.hulls.size();
  const auto design = is_sg_design(family, arr);
  r.is_design = design.ok;
  if (!design.ok && design.witness)
    r.notes.push_back("ordinary hull: pair " + std::to_string(design.witness->first) +
                      "," + std::to_string(design.witness->second));

  if (r.is_design) {
    try {
      hull_multiplicities(arr);
    } catch (const TheoremViolation& e) {
      r.multiplicity_ok = false;
      r.notes.push_back(e.what());
    }
    if (k == 1 && family.members.size() <= 6 && r.n_hulls > 1) {
      r.small_family_ok = false;
      r.notes.push_back("small-family invariant fails: n <= 6 with multiple hulls");
    }
  }

  if (r.n_hulls == 0) {
    r.central = true;  // vacuous
  } else {
    const auto center = is_central(arr);
    r.central = center.has_value();
    if (center) {
      r.common_point = center->base();
      if (r.n_hulls >= 2) {
        const LineFamily shifted = translate(family, negated(center->base()));
        const HullArrangement arr0 = build_hulls(shifted);
        try {
          const AffineSubspace l = extract_transversal(arr0, shifted);
          r.transversal = l;
          const auto points = project_family(shifted, l);
          r.projected_collinear = are_collinear(points);
          if (!find_ordinary_line(points) && !*r.projected_collinear)
            r.notes.push_back("projected SGC is not collinear");
        } catch (const std::exception& e) {
          r.notes.push_back(std::string("transversal pipeline: ") + e.what());
        }
      }
    }
  }

  // the equivalence is claimed only for SG designs; vacuous otherwise
  r.consistent = !r.is_design || (r.central == r.all_in_3d);
  return r;
}

}  // namespace sg
