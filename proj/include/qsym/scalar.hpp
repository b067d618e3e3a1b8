#pragma once

#include <string>
#include <tuple>
#include <utility>

#include "qsym/poly.hpp"

namespace qsym {

// Exact scalar: either a rational number or an element of Q(z), the
// univariate rational-function deformation field.
//
// Invariants: the rational-function form is gcd-reduced with a monic nonzero
// denominator, and any value that reduces to a constant is stored in numeric
// form, so structural equality is value equality.
class FieldScalar {
 public:
  FieldScalar() : r_(0) {}
  FieldScalar(int v) : r_(v) {}        // NOLINT: implicit by design
  FieldScalar(long v) : r_(v) {}       // NOLINT
  FieldScalar(const Rat& v) : r_(v) {} // NOLINT

  static FieldScalar ratfunc(Poly num, Poly den) {
    if (poly_is_zero(den)) throw ZeroDivide("FieldScalar: zero denominator polynomial");
    Poly g = poly_gcd(num, den);
    if (poly_deg(g) > 0) {
      num = poly_divmod(num, g).first;
      den = poly_divmod(den, g).first;
    }
    Rat lc = den.c.back();
    if (lc != 1) {
      for (auto& x : num.c) x /= lc;
      for (auto& x : den.c) x /= lc;
    }
    if (poly_deg(num) <= 0 && poly_deg(den) == 0) {
      return FieldScalar(poly_is_zero(num) ? Rat(0) : num.c[0]);
    }
    FieldScalar out;
    out.rf_ = true;
    out.num_ = std::move(num);
    out.den_ = std::move(den);
    return out;
  }

  // The deformation variable z.
  static FieldScalar z() { return ratfunc(poly_z(), poly_const(Rat(1))); }

  bool is_ratfunc() const { return rf_; }
  bool is_zero() const { return rf_ ? false : r_ == 0; }

  const Rat& numeric() const {
    if (rf_) throw std::logic_error("FieldScalar: numeric() on a rational-function value");
    return r_;
  }

  const Poly& num_poly() const { return rf_ ? num_ : promote_num(); }
  const Poly& den_poly() const { return rf_ ? den_ : promote_den(); }

  friend FieldScalar operator+(const FieldScalar& a, const FieldScalar& b) {
    if (!a.rf_ && !b.rf_) return FieldScalar(a.r_ + b.r_);
    auto [an, ad] = a.as_pair();
    auto [bn, bd] = b.as_pair();
    return ratfunc(poly_add(poly_mul(an, bd), poly_mul(bn, ad)), poly_mul(ad, bd));
  }

  friend FieldScalar operator-(const FieldScalar& a, const FieldScalar& b) {
    if (!a.rf_ && !b.rf_) return FieldScalar(a.r_ - b.r_);
    auto [an, ad] = a.as_pair();
    auto [bn, bd] = b.as_pair();
    return ratfunc(poly_sub(poly_mul(an, bd), poly_mul(bn, ad)), poly_mul(ad, bd));
  }

  friend FieldScalar operator-(const FieldScalar& a) {
    if (!a.rf_) return FieldScalar(-a.r_);
    FieldScalar out = a;
    out.num_ = poly_neg(out.num_);
    return out;
  }

  friend FieldScalar operator*(const FieldScalar& a, const FieldScalar& b) {
    if (!a.rf_ && !b.rf_) return FieldScalar(a.r_ * b.r_);
    auto [an, ad] = a.as_pair();
    auto [bn, bd] = b.as_pair();
    return ratfunc(poly_mul(an, bn), poly_mul(ad, bd));
  }

  friend FieldScalar operator/(const FieldScalar& a, const FieldScalar& b) {
    if (b.is_zero()) throw ZeroDivide("FieldScalar: division by zero");
    if (!a.rf_ && !b.rf_) return FieldScalar(a.r_ / b.r_);
    auto [an, ad] = a.as_pair();
    auto [bn, bd] = b.as_pair();
    return ratfunc(poly_mul(an, bd), poly_mul(ad, bn));
  }

  FieldScalar& operator+=(const FieldScalar& o) { return *this = *this + o; }
  FieldScalar& operator-=(const FieldScalar& o) { return *this = *this - o; }
  FieldScalar& operator*=(const FieldScalar& o) { return *this = *this * o; }
  FieldScalar& operator/=(const FieldScalar& o) { return *this = *this / o; }

  // Integer power, negative exponents allowed for nonzero values.
  FieldScalar pow(long e) const {
    if (e == 0) return FieldScalar(1);
    FieldScalar base = *this;
    unsigned long k;
    if (e < 0) {
      if (is_zero()) throw ZeroDivide("FieldScalar: 0 to a negative power");
      base = FieldScalar(1) / *this;
      k = 0UL - static_cast<unsigned long>(e);
    } else {
      k = static_cast<unsigned long>(e);
    }
    FieldScalar out(1);
    while (k) {
      if (k & 1UL) out *= base;
      base *= base;
      k >>= 1UL;
    }
    return out;
  }

  bool operator==(const FieldScalar& o) const {
    if (rf_ != o.rf_) return false;
    return rf_ ? (num_ == o.num_ && den_ == o.den_) : r_ == o.r_;
  }

  // Arbitrary total order, for use as a map key.
  bool operator<(const FieldScalar& o) const {
    if (rf_ != o.rf_) return !rf_;
    if (!rf_) return r_ < o.r_;
    return std::tie(num_.c, den_.c) < std::tie(o.num_.c, o.den_.c);
  }

  std::string str() const {
    if (!rf_) return rat_str(r_);
    return "(" + poly_str(num_) + ")/(" + poly_str(den_) + ")";
  }

 private:
  bool rf_ = false;
  Rat r_;
  Poly num_, den_;

  std::pair<Poly, Poly> as_pair() const {
    if (rf_) return {num_, den_};
    return {poly_const(r_), poly_const(Rat(1))};
  }

  const Poly& promote_num() const {
    static thread_local Poly tmp;
    tmp = poly_const(r_);
    return tmp;
  }
  const Poly& promote_den() const {
    static thread_local Poly tmp;
    tmp = poly_const(Rat(1));
    return tmp;
  }
};

// Evaluates a reduced rational-function value at z = 1; numeric input is
// returned unchanged. Throws PoleAtOne when the reduced denominator vanishes.
inline FieldScalar rf_limit_at_one(const FieldScalar& r) {
  if (!r.is_ratfunc()) return r;
  Rat den = poly_eval(r.den_poly(), Rat(1));
  if (den == 0) throw PoleAtOne("rf_limit_at_one: denominator vanishes at z = 1");
  return FieldScalar(poly_eval(r.num_poly(), Rat(1)) / den);
}

// (a; q)_k = prod_{m=0}^{k-1} (1 - a q^m); empty product for k <= 0.
inline FieldScalar q_pochhammer(const FieldScalar& a, const FieldScalar& q, long k) {
  FieldScalar out(1);
  FieldScalar aq = a;
  for (long m = 0; m < k; ++m) {
    out *= FieldScalar(1) - aq;
    aq *= q;
  }
  return out;
}

}  // namespace qsym
