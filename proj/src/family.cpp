#include "sg/family.hpp"

namespace sg {

LineFamily translate(const LineFamily& family, const QVec& offset) {
  LineFamily out{family.ambient_dim, family.member_dim, {}};
  out.members.reserve(family.members.size());
  for (const auto& m : family.members) out.members.push_back(translate(m, offset));
  return out;
}

}  // namespace sg
