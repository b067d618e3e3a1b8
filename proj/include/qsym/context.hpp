#pragma once

#include <optional>
#include <random>
#include <vector>

#include "qsym/partition.hpp"
#include "qsym/scalar.hpp"

namespace qsym {

enum class CtxMode { LambdaTied, FreeS };

// Evaluation point for all coefficient formulas. In LambdaTied mode
// s_i = t^{n-i} q^{lambda_i} exactly; FreeS draws s from disjoint prime
// supports so monomials in (q, t, s) vanish only identically.
struct EvalContext {
  int n = 1;
  FieldScalar q, t;
  std::vector<FieldScalar> s;  // size n, 0-based
  CtxMode mode = CtxMode::FreeS;
  Partition lambda;  // padded to length n in LambdaTied mode
  bool special = false;  // suite override: specialization point, guard skipped

  FieldScalar sratio(int i, int j) const { return s.at(i) / s.at(j); }
};

// Generic (q, t) points with disjoint prime supports ({2,3} vs {5,7}).
inline std::pair<Rat, Rat> generic_qt(int trial) {
  static const std::pair<const char*, const char*> pts[] = {
      {"2/3", "5/7"}, {"4/3", "7/5"}, {"9/8", "25/7"}, {"3/2", "5/49"}, {"8/9", "35"},
  };
  auto [qs, ts] = pts[trial % 5];
  return {rat_parse(qs), rat_parse(ts)};
}

namespace detail {
inline const int kFreePrimes[] = {11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
}

// Deterministic free s values: s_i uses its own pair of primes, exponents
// seeded, so any distinct seeds and indices stay multiplicatively independent
// of each other and of the (q, t) primes.
inline std::vector<FieldScalar> free_s_values(int n, unsigned long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> exp_dist(1, 3);
  std::vector<FieldScalar> s;
  s.reserve(n);
  for (int i = 0; i < n; ++i) {
    Rat num = rat_pow(Rat(detail::kFreePrimes[(2 * i) % 16]), exp_dist(rng));
    Rat den = rat_pow(Rat(detail::kFreePrimes[(2 * i + 1) % 16]), exp_dist(rng));
    s.emplace_back(num / den);
  }
  return s;
}

// Checks q^a t^b != 1 for all |a|, |b| <= 20 with (a, b) != (0, 0).
inline bool generic_pair(const FieldScalar& q, const FieldScalar& t) {
  if (q.is_ratfunc() || t.is_ratfunc()) return true;
  std::vector<Rat> qp(41), tp(41);
  for (int a = -20; a <= 20; ++a) qp[a + 20] = rat_pow(q.numeric(), a);
  for (int b = -20; b <= 20; ++b) tp[b + 20] = rat_pow(t.numeric(), b);
  for (int a = -20; a <= 20; ++a)
    for (int b = -20; b <= 20; ++b) {
      if (a == 0 && b == 0) continue;
      if (qp[a + 20] * tp[b + 20] == 1) return false;
    }
  return true;
}

inline EvalContext make_context(int n, const std::optional<Partition>& lambda, const FieldScalar& q,
                                const FieldScalar& t, unsigned long seed = 0, bool special = false) {
  if (n < 1) throw std::invalid_argument("make_context: n must be positive");
  if (!q.is_ratfunc() && q.numeric() == 1) throw std::invalid_argument("make_context: q = 1 is rejected");
  if (!special) {
    if (!q.is_ratfunc() && (q.numeric() == 0 || q.numeric() == -1))
      throw std::invalid_argument("make_context: q in {0,-1} requires a specialization suite");
    if (!t.is_ratfunc() && (t.numeric() == 0 || t.numeric() == 1))
      throw std::invalid_argument("make_context: t in {0,1} requires a specialization suite");
    if (!generic_pair(q, t))
      throw std::invalid_argument("make_context: (q,t) violates multiplicative genericity");
  }
  EvalContext ctx;
  ctx.n = n;
  ctx.q = q;
  ctx.t = t;
  ctx.special = special;
  if (lambda.has_value()) {
    Partition lam = *lambda;
    if (!is_partition(lam)) throw std::invalid_argument("make_context: invalid partition");
    if (static_cast<int>(normalize(lam).size()) > n)
      throw std::invalid_argument("make_context: lambda longer than n");
    ctx.mode = CtxMode::LambdaTied;
    ctx.lambda = pad(normalize(lam), n);
    ctx.s.reserve(n);
    for (int i = 1; i <= n; ++i) ctx.s.push_back(t.pow(n - i) * q.pow(ctx.lambda[i - 1]));
  } else {
    ctx.mode = CtxMode::FreeS;
    ctx.s = free_s_values(n, seed);
  }
  return ctx;
}

// Deformation of a context used to resolve removable singularities:
// tied mode multiplies t by z (s recomputed from the tied relation), free
// mode multiplies s_i by z^i. Limits at z = 1 recover the original point.
inline EvalContext deformed_context(const EvalContext& ctx) {
  EvalContext out = ctx;
  out.special = true;
  if (ctx.mode == CtxMode::LambdaTied) {
    out.t = ctx.t * FieldScalar::z();
    for (int i = 1; i <= ctx.n; ++i) out.s[i - 1] = out.t.pow(ctx.n - i) * out.q.pow(ctx.lambda[i - 1]);
  } else {
    for (int i = 1; i <= ctx.n; ++i) out.s[i - 1] = ctx.s[i - 1] * FieldScalar::z().pow(i);
    out.mode = CtxMode::FreeS;
  }
  return out;
}

}  // namespace qsym
