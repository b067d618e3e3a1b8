#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qsym/rational.hpp"

namespace qsym {

// Dense univariate polynomial over Q in the deformation variable z.
// Invariant: coefficient vector is trimmed (empty, or nonzero leading term).
struct Poly {
  std::vector<Rat> c;  // c[i] is the z^i coefficient

  bool operator==(const Poly&) const = default;
};

inline void poly_trim(Poly& p) {
  while (!p.c.empty() && p.c.back() == 0) p.c.pop_back();
}

inline Poly poly_const(const Rat& v) {
  Poly p;
  if (v != 0) p.c = {v};
  return p;
}

inline Poly poly_z() {
  Poly p;
  p.c = {Rat(0), Rat(1)};
  return p;
}

inline bool poly_is_zero(const Poly& p) { return p.c.empty(); }

// Degree; -1 for the zero polynomial.
inline int poly_deg(const Poly& p) { return static_cast<int>(p.c.size()) - 1; }

inline Poly poly_add(const Poly& a, const Poly& b) {
  Poly out;
  out.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) out.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) out.c[i] += b.c[i];
  poly_trim(out);
  return out;
}

inline Poly poly_neg(const Poly& a) {
  Poly out = a;
  for (auto& x : out.c) x = -x;
  return out;
}

inline Poly poly_sub(const Poly& a, const Poly& b) { return poly_add(a, poly_neg(b)); }

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  if (poly_is_zero(a) || poly_is_zero(b)) return out;
  out.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
  }
  poly_trim(out);
  return out;
}

// Quotient and remainder over the field Q; b must be nonzero.
inline std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  if (poly_is_zero(b)) throw ZeroDivide("poly_divmod: division by zero polynomial");
  Poly r = a, q;
  if (a.c.size() >= b.c.size()) q.c.assign(a.c.size() - b.c.size() + 1, Rat(0));
  while (!poly_is_zero(r) && r.c.size() >= b.c.size()) {
    Rat f = r.c.back() / b.c.back();
    size_t d = r.c.size() - b.c.size();
    q.c[d] = f;
    for (size_t i = 0; i < b.c.size(); ++i) r.c[d + i] -= f * b.c[i];
    poly_trim(r);
  }
  poly_trim(q);
  return {q, r};
}

inline Poly poly_make_monic(Poly p) {
  if (!poly_is_zero(p) && p.c.back() != 1) {
    Rat lc = p.c.back();
    for (auto& x : p.c) x /= lc;
  }
  return p;
}

// Monic gcd via the Euclidean remainder sequence, renormalized each step.
inline Poly poly_gcd(Poly a, Poly b) {
  a = poly_make_monic(std::move(a));
  b = poly_make_monic(std::move(b));
  while (!poly_is_zero(b)) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = poly_make_monic(std::move(r));
  }
  return a;
}

inline Rat poly_eval(const Poly& p, const Rat& x) {
  Rat out(0);
  for (size_t i = p.c.size(); i-- > 0;) out = out * x + p.c[i];
  return out;
}

inline std::string poly_str(const Poly& p) {
  if (poly_is_zero(p)) return "0";
  std::string out;
  for (size_t i = 0; i < p.c.size(); ++i) {
    if (p.c[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += rat_str(p.c[i]);
    if (i >= 1) out += "*z^" + std::to_string(i);
  }
  return out;
}

}  // namespace qsym
