#pragma once

#include <json.hpp>

#include "sg/family.hpp"
#include "sg/incidence.hpp"
#include "sg/verify.hpp"

namespace sg {

// Field order is fixed so serialized output is byte-stable across runs.
using Json = nlohmann::ordered_json;

Json to_json(const Rat& r);
Json to_json(const QVec& v);
Json to_json(const QMat& m);
Json to_json(const AffineSubspace& w);
Json to_json(const LineFamily& family);
Json to_json(const IncidenceDesign& design);
Json to_json(const TheoremReport& report);

Rat rat_from_json(const Json& j);
QVec qvec_from_json(const Json& j);
QMat qmat_from_json(const Json& j);
AffineSubspace affine_from_json(const Json& j);
LineFamily family_from_json(const Json& j);
IncidenceDesign design_from_json(const Json& j);
std::vector<QVec> points_from_json(const Json& j);

}  // namespace sg
