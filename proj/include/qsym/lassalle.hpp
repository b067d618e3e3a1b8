#pragma once

#include <bit>

#include "qsym/raising.hpp"

namespace qsym {

namespace detail {

inline void check_den(const FieldScalar& d, const char* where) {
  if (d.is_zero()) throw UncancelledPole(std::string(where) + ": denominator vanishes");
}

}  // namespace detail

// Prefactor shared by both determinant-factor routes of the C function.
inline FieldScalar ls_prefactor(const std::vector<int>& thetas,
                                const std::vector<FieldScalar>& u, const FieldScalar& q,
                                const FieldScalar& t) {
  size_t k = thetas.size();
  std::vector<FieldScalar> v(k);
  for (size_t i = 0; i < k; ++i) v[i] = q.pow(thetas[i]) * u[i];
  FieldScalar out(1);
  for (size_t i = 0; i < k; ++i) {
    FieldScalar den = q_pochhammer(q, q, thetas[i]) * q_pochhammer(q * t * u[i], q, thetas[i]);
    detail::check_den(den, "ls_prefactor");
    out *= t.pow(thetas[i]) * q_pochhammer(q / t, q, thetas[i]) *
           q_pochhammer(q * u[i], q, thetas[i]) / den;
  }
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j) {
      FieldScalar den =
          q_pochhammer(q * u[i] / u[j], q, thetas[i]) * q_pochhammer(u[i] / v[j], q, thetas[i]);
      detail::check_den(den, "ls_prefactor");
      out *= q_pochhammer(q * u[i] / (t * u[j]), q, thetas[i]) *
             q_pochhammer(t * u[i] / v[j], q, thetas[i]) / den;
    }
  return out;
}

// Inverted-Pieri coefficient C_{theta_1..theta_k}(u_1..u_k): prefactor times
// the determinant factor in its subset-expansion form, where the inner
// product over u runs over the k given values extended by u_{k+1} = 1/t.
inline FieldScalar ls_C(const std::vector<int>& thetas, const std::vector<FieldScalar>& u,
                        const FieldScalar& q, const FieldScalar& t) {
  size_t k = thetas.size();
  if (k == 0) return FieldScalar(1);
  std::vector<FieldScalar> v(k);
  for (size_t i = 0; i < k; ++i) v[i] = q.pow(thetas[i]) * u[i];
  std::vector<FieldScalar> uext = u;
  uext.push_back(FieldScalar(1) / t);
  // Indices with theta = 0 have v = u, so any subset containing them is
  // killed identically by the (u_kappa - v_kappa) numerator factor; only
  // subsets of the active indices are enumerated.
  std::vector<size_t> active;
  for (size_t i = 0; i < k; ++i)
    if (thetas[i] != 0) active.push_back(i);
  FieldScalar detfac(0);
  for (size_t amask = 0; amask < (size_t{1} << active.size()); ++amask) {
    size_t mask = 0;
    for (size_t b = 0; b < active.size(); ++b)
      if (amask & (size_t{1} << b)) mask |= size_t{1} << active[b];
    int sz = std::popcount(mask);
    FieldScalar term = t.pow(-static_cast<long>(sz) * (sz + 1) / 2);
    if (sz % 2) term = -term;
    for (size_t kp = 0; kp < k; ++kp) {
      if (!(mask & (size_t{1} << kp))) continue;
      for (size_t j = 0; j < k; ++j) {
        if (mask & (size_t{1} << j)) continue;
        FieldScalar den = v[j] - v[kp];
        detail::check_den(den, "ls_C subset");
        term *= (v[j] - v[kp] / t) / den;
      }
      for (size_t i = 0; i <= k; ++i) {
        FieldScalar den = uext[i] - v[kp] / t;
        detail::check_den(den, "ls_C subset");
        term *= (uext[i] - v[kp]) / den;
      }
    }
    detfac += term;
  }
  return ls_prefactor(thetas, u, q, t) * detfac;
}

// Same coefficient with the determinant factor evaluated literally as
// det(v_i^{k-j} [1 - t^{j-1} ((1-t v_i)/(1-v_i)) prod_kappa (u_kappa - v_i)/(t u_kappa - v_i)]) / Vandermonde(v).
// Rows with theta_i = 0 have v_i = u_i, which kills the correction through
// the (u_i - v_i) factor; those rows are reduced before any evaluation.
inline FieldScalar ls_C_det(const std::vector<int>& thetas, const std::vector<FieldScalar>& u,
                            const FieldScalar& q, const FieldScalar& t) {
  size_t k = thetas.size();
  if (k == 0) return FieldScalar(1);
  std::vector<FieldScalar> v(k);
  for (size_t i = 0; i < k; ++i) v[i] = q.pow(thetas[i]) * u[i];
  FieldScalar vand(1);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j) vand *= v[i] - v[j];
  detail::check_den(vand, "ls_C_det: repeated v");
  std::vector<std::vector<FieldScalar>> m(k, std::vector<FieldScalar>(k, FieldScalar(0)));
  for (size_t i = 0; i < k; ++i) {
    FieldScalar corr(0);
    if (thetas[i] != 0) {
      FieldScalar den = FieldScalar(1) - v[i];
      detail::check_den(den, "ls_C_det");
      corr = (FieldScalar(1) - t * v[i]) / den;
      for (size_t kp = 0; kp < k; ++kp) {
        FieldScalar d2 = t * u[kp] - v[i];
        detail::check_den(d2, "ls_C_det");
        corr *= (u[kp] - v[i]) / d2;
      }
    }
    for (size_t j = 0; j < k; ++j)
      m[i][j] = v[i].pow(static_cast<long>(k - 1 - j)) *
                (FieldScalar(1) - t.pow(static_cast<long>(j)) * corr);
  }
  // Gaussian elimination determinant over the exact field.
  FieldScalar det(1);
  for (size_t col = 0; col < k; ++col) {
    size_t piv = col;
    while (piv < k && m[piv][col].is_zero()) ++piv;
    if (piv == k) return FieldScalar(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (size_t r = col + 1; r < k; ++r) {
      if (m[r][col].is_zero()) continue;
      FieldScalar f = m[r][col] / m[col][col];
      for (size_t c2 = col; c2 < k; ++c2) m[r][c2] -= f * m[col][c2];
    }
  }
  return ls_prefactor(thetas, u, q, t) * det / vand;
}

// Column block and u arguments entering the factor for column c+1 (0-based
// column index c = 1..n-1): u_i = q^{lambda_i - lambda_c + xi_{i,c-1}} t^{c-1-i}.
// In the deformed variant each u_i carries z^{i-c}, the slice of the global
// line s_i -> s_i z^i.
inline std::vector<int> ls_column_block(const ThetaMatrix& th, int c) {
  std::vector<int> block(static_cast<size_t>(c));
  for (int i = 0; i < c; ++i) block[static_cast<size_t>(i)] = th.at(i, c);
  return block;
}

inline std::vector<FieldScalar> ls_column_u(const Partition& lam, const ThetaMatrix& th, int c,
                                            const FieldScalar& q, const FieldScalar& t,
                                            bool deformed) {
  std::vector<FieldScalar> u(static_cast<size_t>(c));
  for (int i = 0; i < c; ++i) {
    FieldScalar ui = q.pow(lam[i] - lam[c] + xi(th, i, c - 1)) * t.pow(c - 1 - i);
    if (deformed) ui *= FieldScalar::z().pow(i - c);
    u[static_cast<size_t>(i)] = ui;
  }
  return u;
}

// Product of the column C factors for one theta.
inline FieldScalar ls_theta_weight(const Partition& lam, const ThetaMatrix& th,
                                   const FieldScalar& q, const FieldScalar& t, bool deformed) {
  FieldScalar w(1);
  for (int c = 1; c < th.n; ++c)
    w *= ls_C(ls_column_block(th, c), ls_column_u(lam, th, c, q, t, deformed), q, t);
  return w;
}

// Lassalle-Schlosser series for Q_lambda: sum over theta_support of the
// column-factor product times g_{lambda + zeta(theta)}. Partitions with
// repeated parts make single terms pole; in that case the whole sum is
// re-evaluated on the deformation line s_i -> s_i z^i, coefficients are
// aggregated per g-vector, and each aggregate gets its limit at z = 1.
inline SymF ls_Q(const Partition& lambda, const FieldScalar& q, const FieldScalar& t) {
  Partition lam = lambda;
  if (!is_partition(lam)) throw std::logic_error("ls_Q: not a partition");
  int n = static_cast<int>(lam.size());
  if (n == 0) return sym_one(Basis::PowerSum);
  std::vector<ThetaMatrix> support = theta_support(lam, n);
  auto assemble = [&](bool deformed) {
    std::map<std::vector<int>, FieldScalar> coeffs;
    for (const ThetaMatrix& th : support) {
      FieldScalar w = ls_theta_weight(lam, th, q, t, deformed);
      if (w.is_zero()) continue;
      std::vector<int> a = lam;
      std::vector<int> z = zeta(th);
      for (int i = 0; i < n; ++i) a[i] += z[i];
      auto [it, fresh] = coeffs.emplace(a, w);
      if (!fresh) it->second += w;
    }
    return coeffs;
  };
  std::map<std::vector<int>, FieldScalar> coeffs;
  bool need_limit = false;
  try {
    coeffs = assemble(false);
  } catch (const UncancelledPole&) {
    coeffs = assemble(true);
    need_limit = true;
  }
  SymF out = sym_zero(Basis::PowerSum);
  for (const auto& [a, w] : coeffs) {
    FieldScalar c = need_limit ? rf_limit_at_one(w) : w;
    if (c.is_zero()) continue;
    out = sym_add(out, sym_scale(g_vector(a, q, t), c));
  }
  return out;
}

}  // namespace qsym
