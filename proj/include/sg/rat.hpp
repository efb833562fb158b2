#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace sg {

// Arbitrary-precision rational scalar. mpq_class keeps values reduced with a
// positive denominator as long as construction goes through make_rat/parse_rat;
// raw two-argument mpq_class construction does not canonicalize.
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Serialized form is "p" when the denominator is 1, otherwise "p/q".
std::string rat_str(const Rat& r);

// Accepts "p", "p/q", optional leading '-'. Throws std::invalid_argument on
// malformed input or zero denominator.
Rat parse_rat(std::string_view s);

using QVec = std::vector<Rat>;

QVec zero_vec(std::size_t dim);
Rat dot(const QVec& a, const QVec& b);
QVec vec_sub(const QVec& a, const QVec& b);
QVec vec_add(const QVec& a, const QVec& b);
bool is_zero_vec(const QVec& v);

}  // namespace sg
