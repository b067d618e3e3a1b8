#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qsym/rational.hpp"

namespace qsym {

// Weakly decreasing nonnegative parts. Canonical form has no trailing zeros;
// zero-padded forms are used locally where a fixed length is demanded.
using Partition = std::vector<int>;

inline Partition normalize(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline bool is_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) return false;
    if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
  }
  return true;
}

inline int weight(const Partition& p) {
  int w = 0;
  for (int x : p) w += x;
  return w;
}

// Count of strictly positive parts.
inline int length(const Partition& p) {
  int l = 0;
  for (int x : p)
    if (x > 0) ++l;
  return l;
}

inline Partition pad(Partition p, int n) {
  p.resize(static_cast<size_t>(n), 0);
  return p;
}

// Parses "2,1,0"; the empty string is the empty partition.
inline Partition parse_partition(const std::string& text) {
  Partition p;
  if (text.empty()) return p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("bad partition literal: " + text);
    size_t pos = 0;
    int v = std::stoi(item, &pos);
    if (pos != item.size() || v < 0) throw std::invalid_argument("bad partition literal: " + text);
    p.push_back(v);
  }
  if (!is_partition(p)) throw std::invalid_argument("parts not weakly decreasing: " + text);
  return p;
}

inline std::string partition_str(const Partition& p) {
  std::string out;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  return out;
}

// All partitions of d in canonical form, first part descending.
inline std::vector<Partition> partitions_of(int d, int max_parts = -1) {
  if (max_parts < 0) max_parts = d;
  std::vector<Partition> out;
  if (d == 0) {
    out.push_back({});
    return out;
  }
  Partition cur;
  auto rec = [&](auto&& self, int rem, int mx) -> void {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) >= max_parts) return;
    for (int p = std::min(rem, mx); p >= 1; --p) {
      cur.push_back(p);
      self(self, rem - p, p);
      cur.pop_back();
    }
  };
  rec(rec, d, d);
  return out;
}

// mu <= lam in the dominance order (prefix sums), same weight assumed.
inline bool dominance_leq(const Partition& mu, const Partition& lam) {
  int pm = 0, pl = 0;
  size_t k = std::max(mu.size(), lam.size());
  for (size_t i = 0; i < k; ++i) {
    pm += i < mu.size() ? mu[i] : 0;
    pl += i < lam.size() ? lam[i] : 0;
    if (pm > pl) return false;
  }
  return true;
}

// z_lambda = prod_i i^{m_i} m_i! over part multiplicities m_i.
inline Rat z_lambda(const Partition& p) {
  std::map<int, int> mult;
  for (int x : p)
    if (x > 0) ++mult[x];
  Rat z(1);
  for (auto [part, m] : mult) {
    z *= rat_pow(Rat(part), m);
    for (int i = 2; i <= m; ++i) z *= i;
  }
  return z;
}

}  // namespace qsym
