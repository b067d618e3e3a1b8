#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qsym/partition.hpp"

namespace qsym {

// Strictly upper-triangular matrix of nonnegative integers, stored flat in
// row-major pair order (0,1), (0,2), ..., (0,n-1), (1,2), ...
struct ThetaMatrix {
  int n = 0;
  std::vector<int> e;

  auto operator<=>(const ThetaMatrix&) const = default;

  static ThetaMatrix zero(int n) {
    return ThetaMatrix{n, std::vector<int>(static_cast<size_t>(n * (n - 1) / 2), 0)};
  }

  static int pair_index(int i, int j, int n) {
    // entries (i, i+1..n-1) start after sum of previous row lengths
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
  }

  int at(int i, int j) const { return e[pair_index(i, j, n)]; }
  int& at(int i, int j) { return e[pair_index(i, j, n)]; }

  bool is_zero() const {
    for (int v : e)
      if (v) return false;
    return true;
  }
};

inline std::vector<std::pair<int, int>> theta_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back({i, j});
  return out;
}

inline std::string theta_str(const ThetaMatrix& th) {
  std::string s;
  for (int i = 0; i + 1 < th.n; ++i) {
    if (i) s += ";";
    for (int j = i + 1; j < th.n; ++j) {
      if (j > i + 1) s += ",";
      s += std::to_string(th.at(i, j));
    }
  }
  return s;
}

// zeta_k = (row sum to the right) - (column sum from above); total is zero.
inline std::vector<int> zeta(const ThetaMatrix& th) {
  std::vector<int> z(static_cast<size_t>(th.n), 0);
  for (int i = 0; i < th.n; ++i)
    for (int j = i + 1; j < th.n; ++j) {
      z[i] += th.at(i, j);
      z[j] -= th.at(i, j);
    }
  return z;
}

// xi_{ik} = sum_{j >= k+2} (theta_{i,j} - theta_{k+1,j}), 0-based, defined
// for 0 <= i <= k <= n-2; the k = n-2 values vanish identically.
inline int xi(const ThetaMatrix& th, int i, int k) {
  int v = 0;
  for (int j = k + 2; j < th.n; ++j) v += th.at(i, j) - th.at(k + 1, j);
  return v;
}

struct ThetaStats {
  std::vector<int> zeta;
  std::vector<std::vector<int>> xi;  // xi[k][i] for 0 <= i <= k <= n-2
};

inline ThetaStats theta_stats(const ThetaMatrix& th) {
  ThetaStats st;
  st.zeta = zeta(th);
  for (int k = 0; k + 1 < th.n; ++k) {
    std::vector<int> row;
    for (int i = 0; i <= k; ++i) row.push_back(xi(th, i, k));
    st.xi.push_back(std::move(row));
  }
  return st;
}

namespace detail {

// Appends every way of filling `count` nonnegative entries with sum <= budget.
inline void compositions_leq(int count, int budget, std::vector<int>& cur,
                             const std::function<void()>& emit) {
  if (count == 0) {
    emit();
    return;
  }
  for (int v = 0; v <= budget; ++v) {
    cur.push_back(v);
    compositions_leq(count - 1, budget - v, cur, emit);
    cur.pop_back();
  }
}

}  // namespace detail

// All theta with lambda_k + zeta_k(theta) >= 0 for every k. Columns are
// filled right to left: once rows j+1..n-1 are fixed, column j's sum is
// capped by lambda_j plus row j's (already chosen) right sum, which proves
// finiteness and makes the enumeration exact.
inline std::vector<ThetaMatrix> theta_support(const Partition& lambda_padded, int n) {
  std::vector<ThetaMatrix> out;
  ThetaMatrix th = ThetaMatrix::zero(n);
  std::function<void(int)> fill_col = [&](int j) {
    if (j == 0) {
      out.push_back(th);
      return;
    }
    int budget = lambda_padded[j];
    for (int l = j + 1; l < n; ++l) budget += th.at(j, l);
    if (budget < 0) return;
    std::vector<int> col;
    detail::compositions_leq(j, budget, col, [&] {
      for (int i = 0; i < j; ++i) th.at(i, j) = col[i];
      fill_col(j - 1);
      for (int i = 0; i < j; ++i) th.at(i, j) = 0;
    });
  };
  fill_col(n - 1);
  std::sort(out.begin(), out.end());
  return out;
}

// All theta with every entry <= bound.
inline std::vector<ThetaMatrix> theta_box(int n, int bound) {
  std::vector<ThetaMatrix> out;
  ThetaMatrix th = ThetaMatrix::zero(n);
  size_t m = th.e.size();
  std::function<void(size_t)> fill = [&](size_t idx) {
    if (idx == m) {
      out.push_back(th);
      return;
    }
    for (int v = 0; v <= bound; ++v) {
      th.e[idx] = v;
      fill(idx + 1);
    }
    th.e[idx] = 0;
  };
  fill(0);
  return out;
}

// The complete (finite) fiber {theta >= 0 : zeta(theta) = z}. Rows are fixed
// top to bottom: row k's sum equals z_k plus the already-known column sum
// above k, so every branch is bounded and the enumeration is exhaustive.
inline std::vector<ThetaMatrix> theta_fiber(int n, const std::vector<int>& z) {
  std::vector<ThetaMatrix> out;
  ThetaMatrix th = ThetaMatrix::zero(n);
  std::function<void(int)> fill_row = [&](int k) {
    int colsum = 0;
    for (int i = 0; i < k; ++i) colsum += th.at(i, k);
    int rowsum = z[k] + colsum;
    if (k == n - 1) {
      if (rowsum == 0) out.push_back(th);
      return;
    }
    if (rowsum < 0) return;
    std::vector<int> row;
    detail::compositions_leq(n - 1 - k, rowsum, row, [&] {
      int total = 0;
      for (int v : row) total += v;
      if (total != rowsum) return;
      for (int j = k + 1; j < n; ++j) th.at(k, j) = row[j - k - 1];
      fill_row(k + 1);
      for (int j = k + 1; j < n; ++j) th.at(k, j) = 0;
    });
  };
  fill_row(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qsym
