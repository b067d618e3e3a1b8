#pragma once

#include <mutex>
#include <tuple>

#include "qsym/symfunc.hpp"

namespace qsym {

namespace detail {

struct OracleEntry {
  SymF P_m;          // monomial basis
  SymF P_p;          // power-sum basis
  FieldScalar norm;  // <P, P> at the table's (q, t)
};

using OracleTable = std::map<Partition, OracleEntry>;

// Builds all Macdonald P of weight d at one (q, t) by Gram-Schmidt over the
// monomial basis in ascending lexicographic order, which refines dominance:
// if mu is strictly dominated by lambda then mu's first differing part is
// smaller, so mu precedes lambda. Projections are subtracted only onto
// strictly dominated partitions; orthogonality to incomparable ones is a
// theorem about the result, asserted in tests rather than enforced here.
inline OracleTable build_oracle(int d, const FieldScalar& q, const FieldScalar& t) {
  std::vector<Partition> parts = partitions_of(d);
  std::sort(parts.begin(), parts.end());
  OracleTable table;
  for (const Partition& lam : parts) {
    OracleEntry e;
    e.P_m = sym_term(Basis::Monomial, lam, FieldScalar(1));
    e.P_p = convert(e.P_m, Basis::PowerSum);
    for (const Partition& mu : parts) {
      if (mu == lam) break;
      if (!dominance_leq(mu, lam)) continue;
      const OracleEntry& prev = table.at(mu);
      FieldScalar c = scalar_product(e.P_p, prev.P_p, q, t) / prev.norm;
      if (c.is_zero()) continue;
      e.P_p = sym_sub(e.P_p, sym_scale(prev.P_p, c));
      e.P_m = sym_sub(e.P_m, sym_scale(prev.P_m, c));
    }
    e.norm = scalar_product(e.P_p, e.P_p, q, t);
    if (e.norm.is_zero())
      throw SingularGram("build_oracle: <P, P> = 0 at " + partition_str(lam) +
                         "; re-sample (q, t)");
    table.emplace(lam, std::move(e));
  }
  return table;
}

inline const OracleTable& oracle_table(int d, const FieldScalar& q, const FieldScalar& t) {
  static std::map<std::tuple<int, FieldScalar, FieldScalar>, OracleTable> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(d, q, t);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_oracle(d, q, t)).first;
  return it->second;
}

inline const OracleEntry& oracle_entry(const Partition& lambda, const FieldScalar& q,
                                       const FieldScalar& t) {
  Partition lam = normalize(lambda);
  int d = weight(lam);
  if (d > max_degree())
    throw DegreeTooLarge("macdonald oracle: weight " + std::to_string(d) + " exceeds cap " +
                         std::to_string(max_degree()));
  return oracle_table(d, q, t).at(lam);
}

}  // namespace detail

// Macdonald P_lambda in the monomial basis: unit coefficient on m_lambda,
// support on dominated partitions, orthogonal to every lower P.
inline SymF macdonald_P(const Partition& lambda, const FieldScalar& q, const FieldScalar& t) {
  return detail::oracle_entry(lambda, q, t).P_m;
}

// b_lambda = <P_lambda, P_lambda>^{-1}.
inline FieldScalar b_coefficient(const Partition& lambda, const FieldScalar& q,
                                 const FieldScalar& t) {
  return FieldScalar(1) / detail::oracle_entry(lambda, q, t).norm;
}

// Q_lambda = b_lambda P_lambda, in the power-sum basis.
inline SymF macdonald_Q(const Partition& lambda, const FieldScalar& q, const FieldScalar& t) {
  const detail::OracleEntry& e = detail::oracle_entry(lambda, q, t);
  return sym_scale(e.P_p, FieldScalar(1) / e.norm);
}

}  // namespace qsym
