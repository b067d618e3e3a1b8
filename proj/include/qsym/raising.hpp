#pragma once

#include "qsym/ledger.hpp"
#include "qsym/oracle.hpp"
#include "qsym/theta.hpp"

namespace qsym {

// Raising-operator coefficient c_n(theta; s, q, t), assembled on the factor
// ledger so that matching numerator and denominator atoms cancel exactly.
// Throws UncancelledPole when a denominator atom still vanishes at the
// context's point; callers fall back to a deformation limit.
inline FieldScalar c_coeff(const ThetaMatrix& th, const EvalContext& ctx) {
  if (th.n != ctx.n) throw std::logic_error("c_coeff: size mismatch");
  int n = ctx.n;
  Ledger led(ctx);
  auto sratio = [&](int i, int j) {
    std::vector<long> se(static_cast<size_t>(n), 0);
    se[static_cast<size_t>(i)] = 1;
    se[static_cast<size_t>(j)] = -1;
    return se;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int thij = th.at(i, j);
      if (thij == 0) continue;
      long E = 0;
      for (int a = j + 1; a < n; ++a) E += th.at(i, a) - th.at(j, a);
      led.mul_mono(0, thij, {});
      led.mul_qpoch(1, -1, {}, thij, 1);
      led.mul_qpoch(1, 0, {}, thij, -1);
      led.mul_qpoch(E + 1, -1, sratio(i, j), thij, 1);
      led.mul_qpoch(E + 1, 0, sratio(i, j), thij, -1);
    }
  for (int k = 2; k < n; ++k)
    for (int l = 0; l < k; ++l)
      for (int m = l + 1; m < k; ++m) {
        int thlk = th.at(l, k);
        if (thlk == 0) continue;
        long F = 0;
        for (int b = k + 1; b < n; ++b) F += th.at(l, b) - th.at(m, b);
        long thmk = th.at(m, k);
        led.mul_qpoch(F + 1, -1, sratio(l, m), thlk, 1);
        led.mul_qpoch(F + 1, 0, sratio(l, m), thlk, -1);
        led.mul_qpoch(F - thmk, 1, sratio(l, m), thlk, 1);
        led.mul_qpoch(F - thmk, 0, sratio(l, m), thlk, -1);
      }
  return led.eval();
}

// c_coeff with the deformation fallback: on an uncancelled pole, re-evaluate
// over Q(z) along the context's deformation line and take the limit z -> 1.
inline FieldScalar c_coeff_robust(const ThetaMatrix& th, const EvalContext& ctx) {
  try {
    return c_coeff(th, ctx);
  } catch (const UncancelledPole&) {
    return rf_limit_at_one(c_coeff(th, deformed_context(ctx)));
  }
}

// Two-variable coefficient, written out exactly as the closed form reads.
inline FieldScalar c2_closed(int theta, const EvalContext& ctx) {
  const FieldScalar& q = ctx.q;
  const FieldScalar& t = ctx.t;
  FieldScalar s12 = ctx.sratio(0, 1);
  FieldScalar num = t.pow(theta) * q_pochhammer(q / t, q, theta) *
                    q_pochhammer(q / t * s12, q, theta);
  FieldScalar den = q_pochhammer(q, q, theta) * q_pochhammer(q * s12, q, theta);
  if (den.is_zero()) throw UncancelledPole("c2_closed: denominator vanishes");
  return num / den;
}

// Three-variable coefficient, written out exactly as the closed form reads.
inline FieldScalar c3_closed(const ThetaMatrix& th, const EvalContext& ctx) {
  const FieldScalar& q = ctx.q;
  const FieldScalar& t = ctx.t;
  int t12 = th.at(0, 1), t13 = th.at(0, 2), t23 = th.at(1, 2);
  FieldScalar s12 = ctx.sratio(0, 1), s13 = ctx.sratio(0, 2), s23 = ctx.sratio(1, 2);
  FieldScalar num = t.pow(t12) * q_pochhammer(q / t, q, t12) *
                    q_pochhammer(q.pow(t13 - t23) * q / t * s12, q, t12);
  num *= t.pow(t13) * q_pochhammer(q / t, q, t13) * q_pochhammer(q / t * s13, q, t13);
  num *= t.pow(t23) * q_pochhammer(q / t, q, t23) * q_pochhammer(q / t * s23, q, t23);
  num *= q_pochhammer(q / t * s12, q, t13) * q_pochhammer(q.pow(-t23) * t * s12, q, t13);
  FieldScalar den = q_pochhammer(q, q, t12) * q_pochhammer(q.pow(t13 - t23) * q * s12, q, t12);
  den *= q_pochhammer(q, q, t13) * q_pochhammer(q * s13, q, t13);
  den *= q_pochhammer(q, q, t23) * q_pochhammer(q * s23, q, t23);
  den *= q_pochhammer(q * s12, q, t13) * q_pochhammer(q.pow(-t23) * s12, q, t13);
  if (den.is_zero()) throw UncancelledPole("c3_closed: denominator vanishes");
  return num / den;
}

// Jing-Jozefiak coefficient of g_{lambda_1 + theta} g_{lambda_2 - theta} for
// n = 2, by two routes: the telescoped difference c_theta - c_{theta-1} and
// the closed product form. Both are returned so callers can assert agreement.
struct JJCoeff {
  FieldScalar difference;
  FieldScalar closed_form;
};

inline JJCoeff jj_coeff(int theta, const EvalContext& ctx) {
  if (ctx.n != 2) throw std::logic_error("jj_coeff: n = 2 required");
  const FieldScalar& q = ctx.q;
  const FieldScalar& t = ctx.t;
  FieldScalar s12 = ctx.sratio(0, 1);
  ThetaMatrix th = ThetaMatrix::zero(2);
  th.at(0, 1) = theta;
  FieldScalar diff = c_coeff_robust(th, ctx);
  if (theta >= 1) {
    th.at(0, 1) = theta - 1;
    diff -= c_coeff_robust(th, ctx);
  }
  FieldScalar num = t.pow(theta) * q_pochhammer(FieldScalar(1) / t, q, theta) *
                    q_pochhammer(s12 / t, q, theta) *
                    (FieldScalar(1) - q.pow(2 * theta) / t * s12);
  FieldScalar den = q_pochhammer(q, q, theta) * q_pochhammer(q * s12, q, theta) *
                    (FieldScalar(1) - s12 / t);
  if (den.is_zero()) throw UncancelledPole("jj_coeff: denominator vanishes");
  return JJCoeff{diff, num / den};
}

using CoeffMemo = std::map<ThetaMatrix, FieldScalar>;

inline const FieldScalar& c_memo(const ThetaMatrix& th, const EvalContext& ctx,
                                 CoeffMemo& memo) {
  auto it = memo.find(th);
  if (it == memo.end()) it = memo.emplace(th, c_coeff_robust(th, ctx)).first;
  return it->second;
}

// Coefficient of R^sigma in prod_{i<j}(1 - R_{ij}) * sum_theta c_n(theta) R^theta:
// the alternating sum of c over sigma minus pair-subset indicators.
inline FieldScalar raising_operator_coeff(const ThetaMatrix& sigma, const EvalContext& ctx,
                                          CoeffMemo& memo) {
  size_t np = sigma.e.size();
  FieldScalar total(0);
  for (size_t mask = 0; mask < (size_t{1} << np); ++mask) {
    ThetaMatrix th = sigma;
    bool ok = true;
    int parity = 0;
    for (size_t b = 0; b < np && ok; ++b) {
      if (!(mask & (size_t{1} << b))) continue;
      int& v = th.e[b];
      if (v == 0) ok = false;
      else {
        --v;
        parity ^= 1;
      }
    }
    if (!ok) continue;
    const FieldScalar& c = c_memo(th, ctx, memo);
    total += parity ? -c : c;
  }
  return total;
}

// Raising-operator series for Q_lambda: expand the operator polynomial, act
// on lambda (R_{ij} shifts a_i up and a_j down through zeta), and sum the
// g-products. The sum runs over theta_support since lower g's vanish.
inline SymF raising_Q(const Partition& lambda, const EvalContext& ctx) {
  if (ctx.mode != CtxMode::LambdaTied)
    throw std::logic_error("raising_Q: lambda-tied context required");
  Partition lam = pad(normalize(lambda), ctx.n);
  if (lam != ctx.lambda) throw std::logic_error("raising_Q: context tied to different lambda");
  CoeffMemo memo;
  SymF out = sym_zero(Basis::PowerSum);
  for (const ThetaMatrix& sigma : theta_support(lam, ctx.n)) {
    FieldScalar w = raising_operator_coeff(sigma, ctx, memo);
    if (w.is_zero()) continue;
    std::vector<int> a = lam;
    std::vector<int> z = zeta(sigma);
    for (int k = 0; k < ctx.n; ++k) a[k] += z[k];
    out = sym_add(out, sym_scale(g_vector(a, ctx.q, ctx.t), w));
  }
  return out;
}

// Hall-Littlewood specialization of the operator expansion at q = 0: the
// R^sigma coefficient collapses to prod_{i<j} (t^{s} - t^{s-1} [s >= 1]).
inline SymF hl_raising_Q(const Partition& lambda, int n, const FieldScalar& t) {
  Partition lam = pad(normalize(lambda), n);
  SymF out = sym_zero(Basis::PowerSum);
  for (const ThetaMatrix& sigma : theta_support(lam, n)) {
    FieldScalar w(1);
    for (int v : sigma.e) {
      FieldScalar f = t.pow(v);
      if (v >= 1) f -= t.pow(v - 1);
      w *= f;
    }
    if (w.is_zero()) continue;
    std::vector<int> a = lam;
    std::vector<int> z = zeta(sigma);
    for (int k = 0; k < n; ++k) a[k] += z[k];
    out = sym_add(out, sym_scale(g_vector(a, FieldScalar(0), t), w));
  }
  return out;
}

}  // namespace qsym
