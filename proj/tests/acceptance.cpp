// Acceptance suite: one line per criterion, exact arithmetic throughout.
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "sg/construct.hpp"
#include "sg/verify.hpp"
#include "fixtures.hpp"

using namespace sg;
using sg::testing::central_fixture_q4;
using sg::testing::central_fixture_q5;
using sg::testing::rank_by_minors;

namespace {

int failures = 0;

void criterion(const std::string& name, const std::function<bool()>& body) {
  bool ok = false;
  std::string detail;
  try {
    ok = body();
  } catch (const std::exception& e) {
    detail = e.what();
  }
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << name;
  if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n" << std::flush;
  if (!ok) ++failures;
}

constexpr int kSeeds = 100;

// shared across criteria 1, 2, 3, 8
std::vector<LineFamily> fano_families;

// Structural invariants that every processed instance must satisfy.
bool invariants_hold(const TheoremReport& r, std::size_t n, std::size_t k) {
  if (!r.multiplicity_ok) return false;
  if (k == 1 && n <= 6 && r.is_design && r.n_hulls > 1) return false;
  return r.small_family_ok;
}

std::vector<TheoremReport> all_reports;

bool criterion1() {
  const auto fano = fano_plane();
  for (int seed = 0; seed < kSeeds; ++seed) {
    const auto fam =
        gen_fano_13(GenSpec{static_cast<std::uint64_t>(seed), 10, 1000});
    if (fam.members.size() != 7) return false;
    if (!pairwise_skew(fam).ok) return false;
    const auto arr = build_hulls(fam);
    if (arr.hulls.size() != 7) return false;
    for (const auto& hs : arr.hulls_per_line)
      if (hs.size() != 3) return false;
    // hull member sets must be exactly the Fano blocks
    for (const auto& lines : arr.lines_per_hull) {
      std::vector<int> pts;
      for (auto i : lines) pts.push_back(static_cast<int>(i) + 1);
      if (std::find(fano.blocks.begin(), fano.blocks.end(), pts) == fano.blocks.end())
        return false;
    }
    if (min_enclosing_flat(fam).dim() != 4) return false;
    fano_families.push_back(fam);
  }
  return true;
}

bool criterion2() {
  if (fano_families.size() != kSeeds) return false;
  for (const auto& fam : fano_families)
    if (is_central(build_hulls(fam))) return false;
  return true;
}

bool criterion3() {
  // generated families
  for (const auto& fam : fano_families) {
    const auto r = check_main_theorem(fam);
    all_reports.push_back(r);
    if (!r.consistent || r.central || r.all_in_3d) return false;
    if (!invariants_hold(r, fam.members.size(), fam.member_dim)) return false;
  }
  // fixture families with n <= 12: hand-built single-hull designs are central
  // and contained; subfamilies of generated designs are checked as found
  std::mt19937_64 rng(101);
  for (int it = 0; it < 10; ++it) {
    const auto fix = central_fixture_q4(rng);
    auto fam = fix.family;
    const auto r = check_main_theorem(fam);
    all_reports.push_back(r);
    if (!r.consistent) return false;
  }
  for (const auto& fam : {fano_families[0], fano_families[1]}) {
    for (std::size_t drop = 0; drop < fam.members.size(); ++drop) {
      LineFamily sub = fam;
      sub.members.erase(sub.members.begin() + static_cast<long>(drop));
      const auto r = check_main_theorem(sub);
      all_reports.push_back(r);
      if (!r.consistent) return false;
      if (!invariants_hold(r, sub.members.size(), sub.member_dim)) return false;
    }
  }
  return true;
}

bool criterion4() {
  std::mt19937_64 rng(202);
  for (int it = 0; it < 12; ++it) {
    const auto fix = central_fixture_q4(rng);
    const auto l = extract_transversal(fix.arr, fix.family);
    for (const auto& h : fix.arr.hulls)
      if (!contains_flat(h, l)) return false;
    for (const auto& m : fix.family.members) {
      if (m == l) return false;
      if (affine_hull(l, m).dim() != 2) return false;
    }
  }
  for (int it = 0; it < 12; ++it) {
    const auto fix = central_fixture_q5(rng);
    const auto l = extract_transversal(fix.arr, fix.family);
    for (const auto& h : fix.arr.hulls)
      if (!contains_flat(h, l)) return false;
    for (const auto& m : fix.family.members) {
      if (m == l) return false;
      if (affine_hull(l, m).dim() != 2) return false;
    }
  }
  return true;
}

bool criterion5() {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t dim = 3 + trial % 2;  // P^2(Q) and P^3(Q)
    const std::size_t n = 3 + rng() % 10;
    const bool force_collinear = trial % 4 == 0;
    const QVec u = sg::testing::random_vec(rng, dim);
    const QVec v = sg::testing::random_vec(rng, dim);
    std::vector<QVec> pts;
    int guard = 0;
    while (pts.size() < n && ++guard < 500) {
      QVec cand(dim);
      if (force_collinear) {
        const long a = static_cast<long>(rng() % 11) - 5;
        const long b = static_cast<long>(rng() % 11) - 5;
        for (std::size_t j = 0; j < dim; ++j) cand[j] = a * u[j] + b * v[j];
      } else {
        cand = sg::testing::random_vec(rng, dim);
      }
      if (is_zero_vec(cand)) continue;
      const QVec canon = row_basis(QMat::from_row(cand)).row(0);
      if (std::find(pts.begin(), pts.end(), canon) == pts.end())
        pts.push_back(canon);
    }
    if (pts.size() < 3) continue;

    std::optional<std::pair<std::size_t, std::size_t>> expect;
    for (std::size_t i = 0; i < pts.size() && !expect; ++i)
      for (std::size_t j = i + 1; j < pts.size() && !expect; ++j) {
        bool third = false;
        for (std::size_t k = 0; k < pts.size() && !third; ++k) {
          if (k == i || k == j) continue;
          QMat m(0, dim);
          m.append_row(pts[i]);
          m.append_row(pts[j]);
          m.append_row(pts[k]);
          if (rank_by_minors(m) == 2) third = true;
        }
        if (!third) expect = std::make_pair(i, j);
      }

    const auto got = find_ordinary_line(pts);
    if (got != expect) return false;
    if (!got.has_value() != are_collinear(pts)) return false;
  }
  return true;
}

bool criterion6() {
  const auto planes = gen_planes_r5(GenSpec{21, 10, 1000});
  const auto origin = AffineSubspace::point(zero_vec(5));
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = i + 1; j < 7; ++j) {
      const auto meet = intersect(planes[i], planes[j]);
      if (!meet || !(*meet == origin)) return false;
    }
  for (const auto& blk : fano_plane().blocks) {
    const auto& pi = planes[static_cast<std::size_t>(blk[0]) - 1];
    const auto& pj = planes[static_cast<std::size_t>(blk[1]) - 1];
    const auto& pk = planes[static_cast<std::size_t>(blk[2]) - 1];
    const QMat sum = subspace_sum(pi.dirs(), pj.dirs());
    if (sum.nrows() != 4) return false;
    if (!contains_flat(AffineSubspace::linear(5, sum), pk)) return false;
  }
  QMat all(0, 5);
  for (const auto& p : planes) all.append_rows(p.dirs());
  return rank(all) == 5;
}

bool criterion7() {
  const auto fam = gen_25(GenSpec{22, 10, 1000});
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = i + 1; j < 7; ++j) {
      if (!is_skew(fam.members[i], fam.members[j])) return false;
      const auto hull = affine_hull(fam.members[i], fam.members[j]);
      if (hull.dim() != 5 || !passes_through_origin(hull)) return false;
    }
  const auto r = check_main_theorem(fam);
  all_reports.push_back(r);
  if (!r.is_design || !r.central) return false;
  if (min_enclosing_flat(fam).dim() != 6) return false;
  if (r.all_in_3d || r.consistent) return false;  // the k=2 analogue fails
  return true;
}

bool criterion8() {
  if (all_reports.empty()) return false;
  for (const auto& r : all_reports)
    if (!r.small_family_ok || !r.multiplicity_ok) return false;
  return true;
}

}  // namespace

int main() {
  criterion("1. generation succeeds for 100 seeds with full design contract",
            criterion1);
  criterion("2. every generated representation is non-central", criterion2);
  criterion("3. centrality <=> 3-flat containment on all line families", criterion3);
  criterion("4. transversal extraction on 24 synthetic central arrangements",
            criterion4);
  criterion("5. ordinary-line search matches triple enumeration on 200 sets",
            criterion5);
  criterion("6. seven planes in Q^5: pairwise origin meets, block spans, full span",
            criterion6);
  criterion("7. the (2,5) family: skew, linear 5-dim hulls, not in a 5-flat",
            criterion7);
  criterion("8. small-family and multiplicity invariants hold on every instance",
            criterion8);
  if (failures == 0) {
    std::cout << "all acceptance criteria passed\n";
    return 0;
  }
  std::cout << failures << " acceptance criteria failed\n";
  return 1;
}
