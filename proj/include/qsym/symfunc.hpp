#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "qsym/partition.hpp"
#include "qsym/scalar.hpp"

namespace qsym {

enum class Basis { PowerSum, Monomial };

inline std::string basis_str(Basis b) { return b == Basis::PowerSum ? "p" : "m"; }

// Symmetric function as a finite combination of basis elements indexed by
// partitions. Stored coefficients are never zero.
struct SymF {
  Basis basis = Basis::PowerSum;
  std::map<Partition, FieldScalar> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const SymF&) const = default;
};

inline SymF sym_zero(Basis b) { return SymF{b, {}}; }

inline SymF sym_one(Basis b) {
  SymF f{b, {}};
  f.terms[Partition{}] = FieldScalar(1);
  return f;
}

inline SymF sym_term(Basis b, Partition p, FieldScalar c) {
  SymF f{b, {}};
  if (!c.is_zero()) f.terms[normalize(std::move(p))] = std::move(c);
  return f;
}

inline void sym_add_term(SymF& f, const Partition& p, const FieldScalar& c) {
  if (c.is_zero()) return;
  auto it = f.terms.find(p);
  if (it == f.terms.end()) {
    f.terms.emplace(p, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) f.terms.erase(it);
}

inline SymF sym_add(const SymF& f, const SymF& g) {
  if (f.basis != g.basis && !f.is_zero() && !g.is_zero())
    throw BasisMismatch("sym_add: mixed bases");
  SymF out = f.is_zero() ? SymF{g.basis, {}} : f;
  for (const auto& [p, c] : g.terms) sym_add_term(out, p, c);
  return out;
}

inline SymF sym_scale(SymF f, const FieldScalar& c) {
  if (c.is_zero()) return sym_zero(f.basis);
  for (auto& [p, v] : f.terms) v *= c;
  return f;
}

inline SymF sym_sub(const SymF& f, const SymF& g) {
  return sym_add(f, sym_scale(g, FieldScalar(-1)));
}

// Weight shared by every term; -1 for the zero function; throws on a mix.
inline int homogeneous_degree(const SymF& f) {
  int d = -1;
  for (const auto& [p, c] : f.terms) {
    int w = weight(p);
    if (d == -1)
      d = w;
    else if (d != w)
      throw std::logic_error("homogeneous_degree: inhomogeneous function");
  }
  return d;
}

// Power-sum basis product: p_lambda p_mu = p_{sort(lambda concat mu)}.
inline SymF multiply(const SymF& f, const SymF& g) {
  if (f.basis != Basis::PowerSum || g.basis != Basis::PowerSum)
    throw BasisMismatch("multiply: power-sum operands required");
  SymF out = sym_zero(Basis::PowerSum);
  for (const auto& [lp, lc] : f.terms)
    for (const auto& [rp, rc] : g.terms) {
      Partition merged = lp;
      merged.insert(merged.end(), rp.begin(), rp.end());
      std::sort(merged.begin(), merged.end(), std::greater<int>());
      sym_add_term(out, merged, lc * rc);
    }
  return out;
}

inline int max_degree() {
  static int cap = [] {
    if (const char* env = std::getenv("QSYM_MAX_DEGREE")) {
      int v = std::atoi(env);
      if (v >= 1) return v;
    }
    return 8;
  }();
  return cap;
}

namespace detail {

// Degree-d transition matrices between the power-sum and monomial bases,
// indexed by the partitions_of(d) ordering.
struct ConvTables {
  std::vector<Partition> parts;
  std::map<Partition, int> index;
  std::vector<std::vector<Rat>> p2m;  // row: source p_lambda, column: target m_nu
  std::vector<std::vector<Rat>> m2p;
};

// Coefficient table of p_k * (m-basis expansion), derived from
// [x^nu] p_k m_mu = #{positions i with sort(nu - k e_i) = mu}.
inline std::map<Partition, Rat> pk_times(const std::map<Partition, Rat>& cur, int k,
                                         int new_deg) {
  std::map<Partition, Rat> out;
  for (const Partition& nu : partitions_of(new_deg)) {
    Rat c = 0;
    size_t i = 0;
    while (i < nu.size()) {
      size_t j = i;
      while (j < nu.size() && nu[j] == nu[i]) ++j;
      if (nu[i] >= k) {
        Partition mu = nu;
        mu[i] -= k;
        std::sort(mu.begin(), mu.end(), std::greater<int>());
        mu = normalize(std::move(mu));
        auto it = cur.find(mu);
        if (it != cur.end()) c += Rat(static_cast<long>(j - i)) * it->second;
      }
      i = j;
    }
    if (c != 0) out[nu] = c;
  }
  return out;
}

inline ConvTables build_conv_tables(int d) {
  ConvTables tab;
  tab.parts = partitions_of(d);
  int m = static_cast<int>(tab.parts.size());
  for (int i = 0; i < m; ++i) tab.index[tab.parts[i]] = i;
  tab.p2m.assign(m, std::vector<Rat>(m, 0));
  for (int i = 0; i < m; ++i) {
    std::map<Partition, Rat> row{{Partition{}, Rat(1)}};
    int deg = 0;
    for (int part : tab.parts[i]) {
      deg += part;
      row = pk_times(row, part, deg);
    }
    for (const auto& [nu, c] : row) tab.p2m[i][tab.index.at(nu)] = c;
  }
  // Invert by Gaussian elimination over the rationals.
  std::vector<std::vector<Rat>> a = tab.p2m;
  tab.m2p.assign(m, std::vector<Rat>(m, 0));
  for (int i = 0; i < m; ++i) tab.m2p[i][i] = 1;
  for (int col = 0; col < m; ++col) {
    int piv = -1;
    for (int r = col; r < m; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::logic_error("build_conv_tables: singular transition matrix");
    std::swap(a[piv], a[col]);
    std::swap(tab.m2p[piv], tab.m2p[col]);
    Rat inv = Rat(1) / a[col][col];
    for (int c = 0; c < m; ++c) {
      a[col][c] *= inv;
      tab.m2p[col][c] *= inv;
    }
    for (int r = 0; r < m; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (int c = 0; c < m; ++c) {
        a[r][c] -= f * a[col][c];
        tab.m2p[r][c] -= f * tab.m2p[col][c];
      }
    }
  }
  return tab;
}

inline const ConvTables& conv_tables(int d) {
  static std::map<int, ConvTables> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(d);
  if (it == cache.end()) it = cache.emplace(d, build_conv_tables(d)).first;
  return it->second;
}

}  // namespace detail

// Change of basis; exact and involutive on round trips. Inhomogeneous input
// is converted degree by degree.
inline SymF convert(const SymF& f, Basis target) {
  if (f.basis == target || f.is_zero()) return SymF{target, f.terms};
  SymF out = sym_zero(target);
  std::map<int, std::vector<std::pair<Partition, FieldScalar>>> slices;
  for (const auto& [p, c] : f.terms) slices[weight(p)].push_back({p, c});
  for (const auto& [d, terms] : slices) {
    if (d > max_degree())
      throw DegreeTooLarge("convert: degree " + std::to_string(d) + " exceeds cap " +
                           std::to_string(max_degree()));
    const auto& tab = detail::conv_tables(d);
    const auto& mat = f.basis == Basis::PowerSum ? tab.p2m : tab.m2p;
    for (const auto& [p, c] : terms) {
      const auto& row = mat[tab.index.at(p)];
      for (size_t j = 0; j < row.size(); ++j)
        if (row[j] != 0) sym_add_term(out, tab.parts[j], c * FieldScalar(row[j]));
    }
  }
  return out;
}

// Macdonald scalar product, extended bilinearly from
// <p_lambda, p_mu> = delta z_lambda prod_j (1 - q^{lambda_j}) / (1 - t^{lambda_j}).
inline FieldScalar scalar_product(const SymF& f, const SymF& g, const FieldScalar& q,
                                  const FieldScalar& t) {
  SymF fp = convert(f, Basis::PowerSum);
  SymF gp = convert(g, Basis::PowerSum);
  FieldScalar total(0);
  for (const auto& [p, fc] : fp.terms) {
    auto it = gp.terms.find(p);
    if (it == gp.terms.end()) continue;
    FieldScalar w(z_lambda(p));
    for (int part : p) {
      FieldScalar den = FieldScalar(1) - t.pow(part);
      if (den.is_zero()) throw ZeroDivide("scalar_product: 1 - t^k vanishes");
      w *= (FieldScalar(1) - q.pow(part)) / den;
    }
    total += fc * it->second * w;
  }
  return total;
}

// One-row Macdonald g_k in the power-sum basis:
// g_k = sum_{|lambda| = k} z_lambda^{-1} prod_j (1 - t^{lambda_j}) / (1 - q^{lambda_j}) p_lambda,
// with g_0 = 1 and g_k = 0 for k < 0.
inline SymF g_row(int k, const FieldScalar& q, const FieldScalar& t) {
  if (k < 0) return sym_zero(Basis::PowerSum);
  if (k == 0) return sym_one(Basis::PowerSum);
  SymF out = sym_zero(Basis::PowerSum);
  for (const Partition& lam : partitions_of(k)) {
    FieldScalar c = FieldScalar(1) / FieldScalar(z_lambda(lam));
    for (int part : lam) {
      FieldScalar den = FieldScalar(1) - q.pow(part);
      if (den.is_zero()) throw ZeroDivide("g_row: 1 - q^k vanishes");
      c *= (FieldScalar(1) - t.pow(part)) / den;
    }
    sym_add_term(out, lam, c);
  }
  return out;
}

// g_a = g_{a_1} g_{a_2} ... ; zero if any index is negative.
inline SymF g_vector(const std::vector<int>& a, const FieldScalar& q, const FieldScalar& t) {
  SymF out = sym_one(Basis::PowerSum);
  for (int k : a) {
    if (k < 0) return sym_zero(Basis::PowerSum);
    if (k == 0) continue;
    out = multiply(out, g_row(k, q, t));
  }
  return out;
}

// s_lambda = det(h_{lambda_i - i + j}) with h_k = g_row(k, q, q), expanded
// over permutations of the determinant.
inline SymF jacobi_trudi_schur(const Partition& lambda, const FieldScalar& q) {
  Partition lam = normalize(lambda);
  int n = static_cast<int>(lam.size());
  if (n == 0) return sym_one(Basis::PowerSum);
  std::map<int, SymF> h;
  auto h_at = [&](int k) -> const SymF& {
    auto it = h.find(k);
    if (it == h.end()) it = h.emplace(k, g_row(k, q, q)).first;
    return it->second;
  };
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  SymF out = sym_zero(Basis::PowerSum);
  do {
    int sign = 1;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    SymF prod = sym_one(Basis::PowerSum);
    bool dead = false;
    for (int i = 0; i < n && !dead; ++i) {
      const SymF& hk = h_at(lam[i] - i + perm[i]);
      if (hk.is_zero()) dead = true;
      else prod = multiply(prod, hk);
    }
    if (!dead) out = sym_add(out, sym_scale(prod, FieldScalar(sign)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Hall-Littlewood one-row q_k(x;t) = g_k at q = 0.
inline SymF hl_q_row(int k, const FieldScalar& t) { return g_row(k, FieldScalar(0), t); }

}  // namespace qsym
