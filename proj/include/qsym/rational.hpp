#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

#include "qsym/errors.hpp"

namespace qsym {

using Rat = mpq_class;

// Parses "p/q" or "p" with optional sign into a canonical exact rational.
inline Rat rat_parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class r;
  if (r.set_str(text, 10) != 0) throw std::invalid_argument("bad rational literal: " + text);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// a^e with e possibly negative; 0^0 = 1.
inline Rat rat_pow(const Rat& a, long e) {
  if (e == 0) return Rat(1);
  Rat base = a;
  unsigned long k;
  if (e < 0) {
    if (a == 0) throw ZeroDivide("rat_pow: 0 to a negative power");
    base = Rat(1) / a;
    k = 0UL - static_cast<unsigned long>(e);
  } else {
    k = static_cast<unsigned long>(e);
  }
  Rat out(1);
  while (k) {
    if (k & 1UL) out *= base;
    base *= base;
    k >>= 1UL;
  }
  return out;
}

}  // namespace qsym
