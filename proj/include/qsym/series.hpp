#pragma once

#include "qsym/raising.hpp"
#include "qsym/report.hpp"

namespace qsym {

// Truncated formal power series in the consecutive ratios y_r = x_{r+1}/x_r,
// r = 0..n-2, cut at total degree N. Every ratio x_b/x_a with a < b embeds
// with nonnegative exponents, so this is an ordinary truncated polynomial
// ring over the scalar field.
struct RatioSeries {
  int n = 1;
  int N = 0;
  std::map<std::vector<int>, FieldScalar> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const RatioSeries&) const = default;
};

inline RatioSeries rs_zero(int n, int N) { return RatioSeries{n, N, {}}; }

inline RatioSeries rs_one(int n, int N) {
  RatioSeries s{n, N, {}};
  s.terms[std::vector<int>(static_cast<size_t>(n > 0 ? n - 1 : 0), 0)] = FieldScalar(1);
  return s;
}

inline int rs_degree(const std::vector<int>& d) {
  int t = 0;
  for (int v : d) t += v;
  return t;
}

inline void rs_add_term(RatioSeries& s, const std::vector<int>& d, const FieldScalar& c) {
  if (c.is_zero() || rs_degree(d) > s.N) return;
  auto it = s.terms.find(d);
  if (it == s.terms.end()) {
    s.terms.emplace(d, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) s.terms.erase(it);
}

inline RatioSeries rs_add(const RatioSeries& a, const RatioSeries& b) {
  RatioSeries out = a;
  for (const auto& [d, c] : b.terms) rs_add_term(out, d, c);
  return out;
}

inline RatioSeries rs_scale(RatioSeries a, const FieldScalar& c) {
  if (c.is_zero()) return rs_zero(a.n, a.N);
  for (auto& [d, v] : a.terms) v *= c;
  return a;
}

inline RatioSeries rs_sub(const RatioSeries& a, const RatioSeries& b) {
  return rs_add(a, rs_scale(b, FieldScalar(-1)));
}

inline RatioSeries rs_mul(const RatioSeries& a, const RatioSeries& b) {
  RatioSeries out = rs_zero(a.n, a.N);
  for (const auto& [da, ca] : a.terms) {
    int dega = rs_degree(da);
    for (const auto& [db, cb] : b.terms) {
      if (dega + rs_degree(db) > out.N) continue;
      std::vector<int> d = da;
      for (size_t i = 0; i < d.size(); ++i) d[i] += db[i];
      rs_add_term(out, d, ca * cb);
    }
  }
  return out;
}

// Exponent vector of (x_b/x_a)^m for a < b: +m on y_a..y_{b-1}.
inline std::vector<int> embed_ratio(int n, int a, int b, int m) {
  std::vector<int> d(static_cast<size_t>(n - 1), 0);
  for (int r = a; r < b; ++r) d[static_cast<size_t>(r)] = m;
  return d;
}

// The polynomial prod_{a<b} (1 - x_b/x_a), truncated like everything else.
inline RatioSeries ratio_prefactor(int n, int N) {
  RatioSeries out = rs_one(n, N);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      RatioSeries f = rs_one(n, N);
      rs_add_term(f, embed_ratio(n, a, b, 1), FieldScalar(-1));
      out = rs_mul(out, f);
    }
  return out;
}

// Sum over theta of c_n(theta) x^theta, truncated: the embedded degree of
// x^theta is sum theta_{ij} (j - i), which bounds the enumeration.
inline RatioSeries series_c_sum(const EvalContext& ctx, int N) {
  RatioSeries out = rs_zero(ctx.n, N);
  auto pairs = theta_pairs(ctx.n);
  ThetaMatrix th = ThetaMatrix::zero(ctx.n);
  std::function<void(size_t, int)> fill = [&](size_t idx, int rem) {
    if (idx == pairs.size()) {
      FieldScalar c = c_coeff_robust(th, ctx);
      if (!c.is_zero()) {
        std::vector<int> d(static_cast<size_t>(ctx.n - 1), 0);
        for (size_t p = 0; p < pairs.size(); ++p)
          for (int r = pairs[p].first; r < pairs[p].second; ++r) d[static_cast<size_t>(r)] += th.e[p];
        rs_add_term(out, d, c);
      }
      return;
    }
    int span = pairs[idx].second - pairs[idx].first;
    for (int v = 0; v * span <= rem; ++v) {
      th.e[idx] = v;
      fill(idx + 1, rem - v * span);
    }
    th.e[idx] = 0;
  };
  fill(0, N);
  return out;
}

// The conjectured eigenfunction series f = prod_{k<l}(1 - x_l/x_k) sum c x^theta.
inline RatioSeries series_f(const EvalContext& ctx, int N) {
  return rs_mul(ratio_prefactor(ctx.n, N), series_c_sum(ctx, N));
}

enum class ParamOrder { QT, TQ };

// Modified Macdonald difference operator on the truncated ring:
//   D1 = sum_i s_i prod_{j<i} (1 - Q^{-1} T x_i/x_j)/(1 - Q^{-1} x_i/x_j)
//                 prod_{k>i} (1 - Q T^{-1} x_k/x_i)/(1 - Q x_k/x_i) T_{Q^{-1}, x_i},
// each ratio factor expanded as a geometric series: the j < i factor is
// 1 + (1-T) sum_{m>=1} Q^{-m} (x_i/x_j)^m, the k > i factor is
// 1 + (1-T^{-1}) sum_{m>=1} Q^m (x_k/x_i)^m. The shift T_{Q^{-1}, x_i}
// multiplies a monomial by Q^{d_i - d_{i-1}} (boundary entries read as 0).
// param_order chooses whether (Q,T) is (q,t) or the swapped pair.
inline RatioSeries apply_D1(const RatioSeries& F, const EvalContext& ctx, int N,
                            ParamOrder order = ParamOrder::QT) {
  const FieldScalar& Q = order == ParamOrder::QT ? ctx.q : ctx.t;
  const FieldScalar& T = order == ParamOrder::QT ? ctx.t : ctx.q;
  int n = ctx.n;
  RatioSeries out = rs_zero(n, N);
  for (int i = 0; i < n; ++i) {
    RatioSeries g = rs_zero(n, N);
    for (const auto& [d, c] : F.terms) {
      long expo = 0;
      if (i >= 1) expo += d[static_cast<size_t>(i - 1)];
      if (i <= n - 2) expo -= d[static_cast<size_t>(i)];
      rs_add_term(g, d, c * Q.pow(-expo));
    }
    for (int j = 0; j < i; ++j) {
      RatioSeries f = rs_one(n, N);
      FieldScalar w = FieldScalar(1) - T;
      for (int m = 1; m * (i - j) <= N; ++m)
        rs_add_term(f, embed_ratio(n, j, i, m), w * Q.pow(-m));
      g = rs_mul(g, f);
    }
    for (int k = i + 1; k < n; ++k) {
      RatioSeries f = rs_one(n, N);
      FieldScalar w = FieldScalar(1) - FieldScalar(1) / T;
      for (int m = 1; m * (k - i) <= N; ++m)
        rs_add_term(f, embed_ratio(n, i, k, m), w * Q.pow(m));
      g = rs_mul(g, f);
    }
    out = rs_add(out, rs_scale(g, ctx.s[static_cast<size_t>(i)]));
  }
  return out;
}

// D1 f - (sum_i s_i) f, conjecturally the zero series.
inline RatioSeries eigen_residual(const EvalContext& ctx, int N,
                                  ParamOrder order = ParamOrder::QT) {
  RatioSeries f = series_f(ctx, N);
  FieldScalar total(0);
  for (const FieldScalar& si : ctx.s) total += si;
  return rs_sub(apply_D1(f, ctx, N, order), rs_scale(f, total));
}

// Coefficients of 2phi1(a, b; c; q, x) up to x^N, built by the term ratio
// (1 - a q^{m-1})(1 - b q^{m-1}) / ((1 - q^m)(1 - c q^{m-1})).
inline std::vector<FieldScalar> phi21_truncated(const FieldScalar& a, const FieldScalar& b,
                                                const FieldScalar& c, const FieldScalar& q,
                                                int N) {
  std::vector<FieldScalar> out;
  out.push_back(FieldScalar(1));
  FieldScalar cur(1);
  for (int m = 1; m <= N; ++m) {
    FieldScalar den = (FieldScalar(1) - q.pow(m)) * (FieldScalar(1) - c * q.pow(m - 1));
    if (den.is_zero()) throw ZeroDenominator("phi21_truncated: denominator vanishes", m);
    cur *= (FieldScalar(1) - a * q.pow(m - 1)) * (FieldScalar(1) - b * q.pow(m - 1)) / den;
    out.push_back(cur);
  }
  return out;
}

// The n = 3 hypergeometric k-sum without the Vandermonde-type prefactor:
// sum_k [(q/t;q)_k^2 (t;q)_k^2 / ((q;q)_k (q s12;q)_k (q s23;q)_k (q s13;q)_k)]
//        (q s13)^k (x3/x1)^k prod_{i<j} 2phi1(q^{k+1}/t, q/t s_ij; q^{k+1} s_ij; q, t x_j/x_i).
inline RatioSeries series_ksum3(const EvalContext& ctx, int N) {
  if (ctx.n != 3) throw std::logic_error("series_ksum3: n = 3 required");
  const FieldScalar& q = ctx.q;
  const FieldScalar& t = ctx.t;
  FieldScalar s12 = ctx.sratio(0, 1), s23 = ctx.sratio(1, 2), s13 = ctx.sratio(0, 2);
  RatioSeries out = rs_zero(3, N);
  for (int k = 0; 2 * k <= N; ++k) {
    FieldScalar num = q_pochhammer(q / t, q, k).pow(2) * q_pochhammer(t, q, k).pow(2);
    FieldScalar den = q_pochhammer(q, q, k) * q_pochhammer(q * s12, q, k) *
                      q_pochhammer(q * s23, q, k) * q_pochhammer(q * s13, q, k);
    if (den.is_zero()) throw UncancelledPole("series_ksum3: k-term denominator vanishes");
    FieldScalar coefk = num / den * (q * s13).pow(k);
    if (coefk.is_zero()) continue;
    RatioSeries term = rs_zero(3, N);
    rs_add_term(term, embed_ratio(3, 0, 2, k), coefk);
    const std::pair<int, int> prs[3] = {{0, 1}, {0, 2}, {1, 2}};
    const FieldScalar* srat[3] = {&s12, &s13, &s23};
    for (int p = 0; p < 3; ++p) {
      auto [i, j] = prs[p];
      int span = j - i;
      int mmax = (N - 2 * k) / span;
      std::vector<FieldScalar> phi =
          phi21_truncated(q.pow(k + 1) / t, q / t * (*srat[p]), q.pow(k + 1) * (*srat[p]), q, mmax);
      RatioSeries f = rs_zero(3, N);
      for (int m = 0; m <= mmax; ++m)
        rs_add_term(f, embed_ratio(3, i, j, m), phi[static_cast<size_t>(m)] * t.pow(m));
      term = rs_mul(term, f);
    }
    out = rs_add(out, term);
  }
  return out;
}

// Full n = 3 hypergeometric series including the prod (1 - x_j/x_i) factor.
inline RatioSeries series_g3(const EvalContext& ctx, int N) {
  return rs_mul(ratio_prefactor(3, N), series_ksum3(ctx, N));
}

// Conjectured identity between the theta-sum and the hypergeometric k-sum,
// compared exactly as printed (no Vandermonde-type prefactor on either side).
inline CheckReport identity_n3(const EvalContext& ctx, int N) {
  CheckReport rep;
  rep.check_id = "identity-n3";
  rep.params = {{"n", "3"},
                {"N", std::to_string(N)},
                {"q", ctx.q.str()},
                {"t", ctx.t.str()},
                {"tier", "conjecture"}};
  RatioSeries lhs = series_c_sum(ctx, N);
  RatioSeries rhs = series_ksum3(ctx, N);
  RatioSeries diff = rs_sub(lhs, rhs);
  if (diff.is_zero()) {
    rep.status = CheckStatus::Pass;
  } else {
    rep.status = CheckStatus::Fail;
    const auto& [d, c] = *diff.terms.begin();
    std::string ds;
    for (size_t i = 0; i < d.size(); ++i) ds += (i ? "," : "") + std::to_string(d[i]);
    rep.witness.push_back({"first_diff", "y^(" + ds + ") coeff " + c.str()});
  }
  return rep;
}

}  // namespace qsym
