#pragma once

#include <gmpxx.h>

#include <string>

namespace kqm {

using Rational = mpq_class;

// "p/q", or "p" when the denominator is 1
inline std::string to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_str();
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline long to_long(const Rational& q) { return q.get_num().get_si(); }

}  // namespace kqm
