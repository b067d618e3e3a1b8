// Acceptance gate: eight criteria, one summary line each. Hard criteria
// must pass for exit code 0; conjecture-tier parts are reported alongside
// and only demoted to informational status, never silently skipped.
#include <chrono>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "qsym/qsym.hpp"

using namespace qsym;

namespace {

struct Outcome {
  bool hard_ok = true;
  std::optional<bool> conj_ok;
  std::string note;  // first failure detail, empty when clean
};

void fail(Outcome& out, const std::string& what) {
  out.hard_ok = false;
  if (out.note.empty()) out.note = what;
}

void fail_conj(Outcome& out, const std::string& what) {
  out.conj_ok = false;
  if (out.note.empty()) out.note = what;
}

std::vector<std::pair<FieldScalar, FieldScalar>> points(int count) {
  std::vector<std::pair<FieldScalar, FieldScalar>> pts;
  for (int i = 0; i < count; ++i) {
    auto [qr, tr] = generic_qt(i);
    pts.emplace_back(FieldScalar(qr), FieldScalar(tr));
  }
  return pts;
}

// (lambda, n) pairs used by both operator-formula criteria: every partition
// of weight <= 6 zero-padded to each n <= 3 that fits it, plus the fixed
// n = 4 sample.
std::vector<std::pair<Partition, int>> operator_cases() {
  std::vector<std::pair<Partition, int>> cases;
  for (int n = 1; n <= 3; ++n)
    for (int d = 1; d <= 6; ++d)
      for (const Partition& lam : partitions_of(d, n)) cases.emplace_back(pad(lam, n), n);
  cases.emplace_back(Partition{1, 1, 1, 1}, 4);
  cases.emplace_back(Partition{2, 1, 1, 0}, 4);
  cases.emplace_back(Partition{2, 2, 1, 1}, 4);
  return cases;
}

Outcome criterion1() {
  Outcome out;
  for (auto& [q, t] : points(3)) {
    for (int d = 1; d <= 6; ++d) {
      std::vector<Partition> parts = partitions_of(d);
      for (const Partition& lam : parts) {
        SymF P = macdonald_P(lam, q, t);
        for (auto& [mu, c] : P.terms) {
          if (c.is_zero()) continue;
          if (mu == lam) {
            if (!(c == FieldScalar(1)))
              fail(out, "P_" + partition_str(lam) + " not monic at m_" + partition_str(mu));
          } else if (!dominance_leq(mu, lam)) {
            fail(out, "P_" + partition_str(lam) + " has non-dominated term m_" + partition_str(mu));
          }
        }
      }
      for (size_t a = 0; a < parts.size(); ++a)
        for (size_t b = a + 1; b < parts.size(); ++b) {
          FieldScalar sp =
              scalar_product(macdonald_P(parts[a], q, t), macdonald_P(parts[b], q, t), q, t);
          if (!sp.is_zero())
            fail(out, "P_" + partition_str(parts[a]) + " not orthogonal to P_" +
                          partition_str(parts[b]));
        }
    }
    for (int k = 1; k <= 6; ++k) {
      if (!sym_sub(macdonald_Q({k}, q, t), g_row(k, q, t)).is_zero())
        fail(out, "Q_(" + std::to_string(k) + ") != g_" + std::to_string(k));
    }
  }
  return out;
}

Outcome criterion2() {
  Outcome out;
  auto cases = operator_cases();
  for (auto& [q, t] : points(3)) {
    for (auto& [lam, n] : cases) {
      EvalContext ctx = make_context(n, lam, q, t);
      if (!sym_sub(raising_Q(lam, ctx), macdonald_Q(lam, q, t)).is_zero())
        fail(out, "raising_Q != oracle at lambda=" + partition_str(lam) +
                      " n=" + std::to_string(n) + " q=" + q.str() + " t=" + t.str());
    }
  }
  return out;
}

Outcome criterion3() {
  Outcome out;
  auto cases = operator_cases();
  for (auto& [q, t] : points(3)) {
    for (auto& [lam, n] : cases) {
      (void)n;
      if (!sym_sub(ls_Q(lam, q, t), macdonald_Q(lam, q, t)).is_zero())
        fail(out, "ls_Q != oracle at lambda=" + partition_str(lam) + " q=" + q.str() +
                      " t=" + t.str());
    }
    ComparisonReport r2 = compare_operator_coeffs(2, {3, 1}, 4, q, t);
    if (r2.status != CheckStatus::Pass) fail(out, "compare n=2 lambda=(3,1) bound 4 failed");
    ComparisonReport r3 = compare_operator_coeffs(3, {2, 1, 1}, 3, q, t);
    if (r3.status != CheckStatus::Pass) fail(out, "compare n=3 lambda=(2,1,1) bound 3 failed");
  }
  {
    auto [q, t] = points(1)[0];
    ComparisonReport r4 = compare_operator_coeffs(4, {75, 50, 25, 0}, 2, q, t);
    out.conj_ok = true;
    for (auto& [k, v] : r4.witness)
      if (k == "fiber_mismatches" && v != "0")
        fail_conj(out, "compare n=4 fiber mismatches: " + v);
  }
  return out;
}

Outcome criterion4() {
  Outcome out;
  int trial = 0;
  for (auto& [q, t] : points(3)) {
    EvalContext ctx = make_context(2, std::nullopt, q, t, 101 + trial);
    if (!eigen_residual(ctx, 5).is_zero())
      fail(out, "eigen residual nonzero at n=2 N=5 q=" + q.str() + " t=" + t.str());
    ++trial;
  }
  out.conj_ok = true;
  trial = 0;
  for (auto& [q, t] : points(3)) {
    for (int n = 3; n <= 4; ++n) {
      EvalContext ctx = make_context(n, std::nullopt, q, t, 211 + trial);
      if (!eigen_residual(ctx, 3).is_zero())
        fail_conj(out, "eigen residual nonzero at n=" + std::to_string(n) + " N=3");
    }
    ++trial;
  }
  return out;
}

Outcome criterion5() {
  Outcome out;
  // t = q: the operator formula collapses to the Jacobi-Trudi determinant.
  for (const char* qs : {"2/3", "5/7", "4/3"}) {
    FieldScalar q(rat_parse(qs));
    for (int d = 1; d <= 5; ++d)
      for (const Partition& lam : partitions_of(d)) {
        int n = length(lam);
        EvalContext ctx = make_context(n, lam, q, q, 0, true);
        if (!sym_sub(raising_Q(lam, ctx), jacobi_trudi_schur(lam, q)).is_zero())
          fail(out, "t=q raising_Q != jacobi-trudi at lambda=" + partition_str(lam));
      }
  }
  // q = 0: operator formula and the Hall-Littlewood collapse both match the
  // q = 0 oracle for length <= 3.
  for (const char* ts : {"5/7", "2/3", "9/4"}) {
    FieldScalar q0(0), t(rat_parse(ts));
    for (int d = 1; d <= 5; ++d)
      for (const Partition& lam : partitions_of(d, 3)) {
        Partition lp = pad(lam, 3);
        EvalContext ctx = make_context(3, lp, q0, t, 0, true);
        SymF oracle = macdonald_Q(lam, q0, t);
        if (!sym_sub(raising_Q(lp, ctx), oracle).is_zero())
          fail(out, "q=0 raising_Q != oracle at lambda=" + partition_str(lam));
        if (!sym_sub(hl_raising_Q(lp, 3, t), oracle).is_zero())
          fail(out, "hall-littlewood expansion != oracle at lambda=" + partition_str(lam));
      }
  }
  // t = q^k via the deformation backend: c_coeff vanishes once any entry
  // reaches k, and the proven eigenfunction specializations hold.
  {
    FieldScalar q(rat_parse("2/3"));
    for (int k = 2; k <= 4; ++k) {
      FieldScalar tz = q.pow(k) * FieldScalar::z();
      EvalContext ctx = make_context(3, std::nullopt, q, tz, 17, true);
      for (const ThetaMatrix& th : theta_box(3, k + 1)) {
        int mx = 0;
        for (int v : th.e) mx = std::max(mx, v);
        if (mx < k) continue;
        FieldScalar c = rf_limit_at_one(c_coeff(th, ctx));
        if (!c.is_zero())
          fail(out, "c_coeff nonzero at t=q^" + std::to_string(k) + " theta=" + theta_str(th));
      }
    }
    for (auto& [n, k] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {3, 4}, {4, 2}}) {
      FieldScalar tk = q.pow(k);
      EvalContext ctx = make_context(n, std::nullopt, q, tk, 31 + n + k, true);
      if (!eigen_residual(ctx, 3).is_zero())
        fail(out, "eigen residual nonzero at n=" + std::to_string(n) + " t=q^" +
                      std::to_string(k));
    }
  }
  return out;
}

Outcome criterion6() {
  Outcome out;
  int trial = 0;
  for (auto& [q, t] : points(3)) {
    EvalContext ctx = make_context(3, std::nullopt, q, t, 41 + trial);
    for (const ThetaMatrix& th : theta_box(3, 3)) {
      CheckReport rep = n3_tilde_check(th, ctx);
      if (rep.status != CheckStatus::Pass)
        fail(out, "n3-tilde failed at theta=" + theta_str(th) + " q=" + q.str());
    }
    ++trial;
  }
  // Subset expansion vs determinant form of the C factor.
  auto [q, t] = points(1)[0];
  for (unsigned long seed = 1; seed <= 5; ++seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> th_dist(0, 3);
    for (size_t k = 2; k <= 3; ++k) {
      std::vector<int> thetas(k);
      for (auto& v : thetas) v = th_dist(rng);
      std::vector<FieldScalar> u = free_s_values(static_cast<int>(k), seed * 7 + k);
      FieldScalar a = ls_C(thetas, u, q, t);
      FieldScalar b = ls_C_det(thetas, u, q, t);
      if (!(a == b)) fail(out, "subset vs determinant C mismatch at seed " + std::to_string(seed));
    }
  }
  return out;
}

Outcome criterion7() {
  Outcome out;
  out.conj_ok = true;
  int trial = 0;
  for (auto& [q, t] : points(3)) {
    EvalContext ctx = make_context(3, std::nullopt, q, t, 59 + trial);
    CheckReport rep = identity_n3(ctx, 4);
    if (rep.status != CheckStatus::Pass)
      fail_conj(out, "series mismatch at q=" + q.str() + " t=" + t.str() +
                         (rep.witness.empty() ? "" : " " + rep.witness[0].second));
    ++trial;
  }
  return out;
}

Outcome criterion8() {
  Outcome out;
  int trial = 0;
  for (auto& [q, t] : points(3)) {
    // Two routes to the n = 2 and n = 3 coefficients: the general product
    // evaluated through the factor ledger vs the closed forms.
    EvalContext f2 = make_context(2, std::nullopt, q, t, 61 + trial);
    EvalContext t2 = make_context(2, Partition{3, 1}, q, t);
    for (int theta = 0; theta <= 5; ++theta) {
      ThetaMatrix th = ThetaMatrix::zero(2);
      th.at(0, 1) = theta;
      for (const EvalContext* ctx : {&f2, &t2}) {
        if (!(c_coeff_robust(th, *ctx) == c2_closed(theta, *ctx)))
          fail(out, "c2 two-route mismatch at theta=" + std::to_string(theta));
      }
    }
    EvalContext f3 = make_context(3, std::nullopt, q, t, 67 + trial);
    EvalContext t3 = make_context(3, Partition{2, 1, 0}, q, t);
    for (const ThetaMatrix& th : theta_box(3, 2)) {
      for (const EvalContext* ctx : {&f3, &t3}) {
        FieldScalar lhs = c_coeff_robust(th, *ctx);
        FieldScalar rhs;
        try {
          rhs = c3_closed(th, *ctx);
        } catch (const UncancelledPole&) {
          continue;  // closed form hits the removable point; ledger route covered it
        }
        if (!(lhs == rhs)) fail(out, "c3 two-route mismatch at theta=" + theta_str(th));
      }
    }
    // Difference of consecutive coefficients vs its closed form, and the
    // one-step recurrence, on the n = 2 line.
    for (int theta = 0; theta <= 5; ++theta) {
      JJCoeff jj = jj_coeff(theta, f2);
      if (!(jj.difference == jj.closed_form))
        fail(out, "jj two-route mismatch at theta=" + std::to_string(theta));
    }
    FieldScalar s12 = f2.sratio(0, 1);
    FieldScalar one(1);
    for (int theta = 1; theta <= 5; ++theta) {
      ThetaMatrix th = ThetaMatrix::zero(2);
      th.at(0, 1) = theta;
      FieldScalar cur = c_coeff_robust(th, f2);
      th.at(0, 1) = theta - 1;
      FieldScalar prev = c_coeff_robust(th, f2);
      FieldScalar qp = q.pow(theta);
      FieldScalar ratio = t * (one - qp / t) * (one - qp / t * s12) /
                          ((one - qp) * (one - qp * s12));
      if (!(cur == ratio * prev))
        fail(out, "recurrence mismatch at theta=" + std::to_string(theta));
    }
    ++trial;
  }
  return out;
}

}  // namespace

int main() {
  struct Row {
    int id;
    const char* label;
    Outcome (*fn)();
  };
  const Row rows[] = {
      {1, "oracle: unitriangular, orthogonal, one-row Q = g", criterion1},
      {2, "raising-operator formula matches oracle", criterion2},
      {3, "inverted-Pieri formula matches oracle + operator comparison", criterion3},
      {4, "difference-operator eigenfunction residual", criterion4},
      {5, "specializations: t=q, q=0, t=q^k", criterion5},
      {6, "n=3 recast checks + C-factor determinant route", criterion6},
      {7, "n=3 hypergeometric series identity", criterion7},
      {8, "two-route coefficient checks", criterion8},
  };
  bool all_hard_ok = true;
  for (const Row& row : rows) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out = row.fn();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all_hard_ok = all_hard_ok && out.hard_ok;
    std::string status = out.hard_ok ? "pass" : "FAIL";
    if (out.conj_ok.has_value())
      status += std::string("; conjecture-tier: ") + (*out.conj_ok ? "pass" : "FAIL");
    std::printf("[%d] %-60s %s (%.1fs)\n", row.id, row.label, status.c_str(), secs);
    if (!out.note.empty()) std::printf("    first failure: %s\n", out.note.c_str());
    std::fflush(stdout);
  }
  return all_hard_ok ? 0 : 1;
}
