#include "sg/rat.hpp"

#include <stdexcept>

namespace sg {

std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat parse_rat(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto check_int = [](std::string_view t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  const auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : s.substr(slash + 1);
  if (!check_int(num) || !check_int(den))
    throw std::invalid_argument("malformed rational literal: " + std::string(s));
  Rat r{mpz_class(std::string(num)), mpz_class(std::string(den))};
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: " + std::string(s));
  r.canonicalize();
  return r;
}

QVec zero_vec(std::size_t dim) { return QVec(dim, Rat(0)); }

Rat dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVec vec_sub(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_sub: dimension mismatch");
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVec vec_add(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_add: dimension mismatch");
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

bool is_zero_vec(const QVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace sg
