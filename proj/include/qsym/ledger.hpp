#pragma once

#include <map>
#include <vector>

#include "qsym/context.hpp"

namespace qsym {

// Key of one atom (1 - q^qe t^te prod_i s_i^{se[i]}). In folded (lambda-tied)
// ledgers the s exponents are rewritten into (qe, te) and se stays empty.
// Canonical keys have their first nonzero entry, in (qe, te, se...) order,
// positive; the all-zero key denotes the literal atom 1 - 1 = 0.
struct AtomKey {
  long qe = 0;
  long te = 0;
  std::vector<long> se;

  auto operator<=>(const AtomKey&) const = default;

  bool is_zero() const {
    if (qe || te) return false;
    for (long e : se)
      if (e) return false;
    return true;
  }

  // Sign of the first nonzero entry; 0 for the zero key.
  int lead() const {
    if (qe) return qe > 0 ? 1 : -1;
    if (te) return te > 0 ? 1 : -1;
    for (long e : se)
      if (e) return e > 0 ? 1 : -1;
    return 0;
  }

  AtomKey negated() const {
    AtomKey k{-qe, -te, se};
    for (auto& e : k.se) e = -e;
    return k;
  }
};

// Signed multiset of Pochhammer atoms with a monomial prefactor. Identical
// numerator and denominator atoms cancel by key before any division, which
// turns structural 0/0 into explicit cancellation; a remaining zero-valued
// denominator atom raises UncancelledPole so the caller can retry in the
// deformation field.
class Ledger {
 public:
  explicit Ledger(const EvalContext& ctx)
      : ctx_(&ctx), fold_(ctx.mode == CtxMode::LambdaTied) {
    if (!fold_) pre_s_.assign(ctx.n, 0);
  }

  // Multiplies by (sign_convention: plain monomial) q^qe t^te prod s^se, mult times.
  void mul_mono(long qe, long te, std::vector<long> se, long mult = 1) {
    fold(qe, te, se);
    pre_q_ += qe * mult;
    pre_t_ += te * mult;
    for (size_t i = 0; i < se.size(); ++i) pre_s_[i] += se[i] * mult;
  }

  // Multiplies by (1 - q^qe t^te prod s^se)^mult; mult < 0 is a denominator atom.
  void mul_atom(long qe, long te, std::vector<long> se, long mult) {
    if (mult == 0) return;
    fold(qe, te, se);
    AtomKey key{qe, te, std::move(se)};
    if (key.lead() < 0) {
      // 1 - X = -X (1 - 1/X): flip to the canonical key, fold sign and
      // monomial into the prefactor.
      if (mult % 2 != 0) sign_ = -sign_;
      pre_q_ += key.qe * mult;
      pre_t_ += key.te * mult;
      for (size_t i = 0; i < key.se.size(); ++i) pre_s_[i] += key.se[i] * mult;
      key = key.negated();
    }
    long& m = atoms_[key];
    m += mult;
    if (m == 0) atoms_.erase(key);
  }

  // Multiplies by the q-shifted factorial (q^qe t^te s^se; q)_len to the given power.
  void mul_qpoch(long qe, long te, const std::vector<long>& se, int len, long mult) {
    for (int m = 0; m < len; ++m) mul_atom(qe + m, te, se, mult);
  }

  FieldScalar eval() const {
    const EvalContext& ctx = *ctx_;
    bool q_is_zero = !ctx.q.is_ratfunc() && ctx.q.numeric() == 0;
    if (q_is_zero) return eval_q0();
    bool numerator_zero = false;
    FieldScalar value(sign_);
    for (const auto& [key, mult] : atoms_) {
      if (key.is_zero()) {
        if (mult < 0) throw UncancelledPole("ledger: zero-key denominator atom");
        numerator_zero = true;
        continue;
      }
      FieldScalar atom = FieldScalar(1) - mono_value(key.qe, key.te, key.se);
      if (atom.is_zero()) {
        if (mult < 0) throw UncancelledPole("ledger: denominator atom vanishes");
        numerator_zero = true;
        continue;
      }
      if (!numerator_zero) value *= atom.pow(mult);
    }
    if (numerator_zero) return FieldScalar(0);
    return value * mono_value(pre_q_, pre_t_, pre_s_);
  }

 private:
  const EvalContext* ctx_;
  bool fold_;
  int sign_ = 1;
  long pre_q_ = 0, pre_t_ = 0;
  std::vector<long> pre_s_;
  std::map<AtomKey, long> atoms_;

  // Lambda-tied rewrite s_i = t^{n-i} q^{lambda_i} applied to exponent keys.
  void fold(long& qe, long& te, std::vector<long>& se) const {
    if (se.empty()) return;
    if (!fold_) {
      se.resize(static_cast<size_t>(ctx_->n), 0);
      return;
    }
    for (size_t i = 0; i < se.size(); ++i) {
      if (!se[i]) continue;
      qe += se[i] * ctx_->lambda[i];
      te += se[i] * (ctx_->n - 1 - static_cast<long>(i));
    }
    se.clear();
  }

  FieldScalar mono_value(long qe, long te, const std::vector<long>& se) const {
    FieldScalar v = ctx_->q.pow(qe) * ctx_->t.pow(te);
    for (size_t i = 0; i < se.size(); ++i)
      if (se[i]) v *= ctx_->s[i].pow(se[i]);
    return v;
  }

  // q = 0 evaluation by valuation: canonical atoms have qe >= 0, so an atom
  // contributes 1 when qe > 0 and 1 - t^te s^se when qe = 0; the prefactor's
  // q-exponent decides between 0, a finite value, and a genuine pole.
  FieldScalar eval_q0() const {
    const EvalContext& ctx = *ctx_;
    if (pre_q_ < 0) throw UncancelledPole("ledger: negative q-valuation at q = 0");
    bool numerator_zero = pre_q_ > 0;
    FieldScalar value(sign_);
    for (const auto& [key, mult] : atoms_) {
      if (key.is_zero()) {
        if (mult < 0) throw UncancelledPole("ledger: zero-key denominator atom");
        numerator_zero = true;
        continue;
      }
      if (key.qe > 0) continue;  // atom value 1 at q = 0
      FieldScalar atom = FieldScalar(1) - mono_value_q0(key.te, key.se);
      if (atom.is_zero()) {
        if (mult < 0) throw UncancelledPole("ledger: denominator atom vanishes at q = 0");
        numerator_zero = true;
        continue;
      }
      if (!numerator_zero) value *= atom.pow(mult);
    }
    if (numerator_zero) return FieldScalar(0);
    value *= ctx.t.pow(pre_t_);
    for (size_t i = 0; i < pre_s_.size(); ++i)
      if (pre_s_[i]) value *= ctx.s[i].pow(pre_s_[i]);
    return value;
  }

  FieldScalar mono_value_q0(long te, const std::vector<long>& se) const {
    FieldScalar v = ctx_->t.pow(te);
    for (size_t i = 0; i < se.size(); ++i)
      if (se[i]) v *= ctx_->s[i].pow(se[i]);
    return v;
  }
};

}  // namespace qsym
