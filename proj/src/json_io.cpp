#include "sg/json_io.hpp"

namespace sg {

Json to_json(const Rat& r) { return rat_str(r); }

Json to_json(const QVec& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(rat_str(x));
  return j;
}

Json to_json(const QMat& m) {
  Json j = Json::array();
  for (const auto& r : m.rows()) j.push_back(to_json(r));
  return j;
}

Json to_json(const AffineSubspace& w) {
  Json j;
  j["ambient_dim"] = w.ambient_dim();
  j["base"] = to_json(w.base());
  j["dirs"] = to_json(w.dirs());
  return j;
}

Json to_json(const LineFamily& family) {
  Json j;
  j["ambient_dim"] = family.ambient_dim;
  j["member_dim"] = family.member_dim;
  Json members = Json::array();
  for (const auto& m : family.members) members.push_back(to_json(m));
  j["members"] = std::move(members);
  return j;
}

Json to_json(const IncidenceDesign& design) {
  Json j;
  j["n_points"] = design.n_points;
  j["blocks"] = design.blocks;
  return j;
}

Json to_json(const TheoremReport& r) {
  Json j;
  j["skew"] = r.skew;
  j["is_design"] = r.is_design;
  j["n_hulls"] = r.n_hulls;
  j["central"] = r.central;
  j["common_point"] = r.common_point ? to_json(*r.common_point) : Json(nullptr);
  j["all_in_3d"] = r.all_in_3d;
  j["transversal"] = r.transversal ? to_json(*r.transversal) : Json(nullptr);
  j["projected_collinear"] =
      r.projected_collinear ? Json(*r.projected_collinear) : Json(nullptr);
  j["consistent"] = r.consistent;
  j["small_family_ok"] = r.small_family_ok;
  j["multiplicity_ok"] = r.multiplicity_ok;
  j["notes"] = r.notes;
  return j;
}

Rat rat_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected rational string");
  return parse_rat(j.get<std::string>());
}

QVec qvec_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected array of rationals");
  QVec v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(rat_from_json(x));
  return v;
}

QMat qmat_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected array of rows");
  QMat m;
  for (const auto& r : j) m.append_row(qvec_from_json(r));
  return m;
}

AffineSubspace affine_from_json(const Json& j) {
  const std::size_t ambient = j.at("ambient_dim").get<std::size_t>();
  QVec base = qvec_from_json(j.at("base"));
  QMat dirs = j.at("dirs").empty() ? QMat(0, ambient) : qmat_from_json(j.at("dirs"));
  return AffineSubspace(ambient, std::move(base), std::move(dirs));
}

LineFamily family_from_json(const Json& j) {
  LineFamily f;
  f.ambient_dim = j.at("ambient_dim").get<std::size_t>();
  f.member_dim = j.at("member_dim").get<std::size_t>();
  for (const auto& m : j.at("members")) f.members.push_back(affine_from_json(m));
  return f;
}

IncidenceDesign design_from_json(const Json& j) {
  IncidenceDesign d;
  d.n_points = j.at("n_points").get<int>();
  d.blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
  return d;
}

std::vector<QVec> points_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected array of points");
  std::vector<QVec> pts;
  for (const auto& p : j) pts.push_back(qvec_from_json(p));
  return pts;
}

}  // namespace sg
