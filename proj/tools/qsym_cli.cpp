// qsym: batch front end for the Macdonald raising-operator toolkit.
//
// Exit codes: 0 all hard checks pass, 1 a check failed (conjecture-tier
// checks count only under --strict), 2 usage error. With --json the full
// report goes to stdout as a single JSON document; identical configuration
// produces byte-identical output.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "qsym/qsym.hpp"

using ojson = nlohmann::ordered_json;
using namespace qsym;

namespace {

constexpr const char* kVersion = "1.0.0";

struct Row {
  CheckReport rep;
  bool conjecture = false;
};

struct Expansion {
  std::string label;
  std::string basis;  // "p", "m", or "g"
  std::map<Partition, FieldScalar> terms;
};

struct Output {
  ojson config = ojson::object();
  std::vector<Row> rows;
  std::vector<Expansion> expansions;
  std::vector<std::pair<std::string, ojson>> extras;
};

bool row_ok(const Row& row) {
  if (row.rep.status == CheckStatus::Fail) return false;
  if (row.rep.status == CheckStatus::Reported) {
    for (const auto& [k, v] : row.rep.witness)
      if (k == "fiber_mismatches" && v != "0") return false;
  }
  return true;
}

ojson expansion_json(const Expansion& e) {
  ojson terms = ojson::array();
  for (const auto& [p, c] : e.terms)
    terms.push_back({{"partition", partition_str(p)}, {"coeff", c.str()}});
  return ojson{{"basis", e.basis}, {"terms", terms}};
}

ojson pairs_json(const std::vector<std::pair<std::string, std::string>>& kv) {
  ojson o = ojson::object();
  for (const auto& [k, v] : kv) o[k] = v;
  return o;
}

int emit(const Output& out, bool json, bool strict) {
  int failures = 0, counted = 0;
  for (const Row& row : out.rows) {
    bool effective = strict || !row.conjecture;
    if (effective) ++counted;
    if (effective && !row_ok(row)) ++failures;
  }
  if (json) {
    ojson doc;
    doc["tool_version"] = kVersion;
    doc["config"] = out.config;
    for (const Expansion& e : out.expansions) doc[e.label] = expansion_json(e);
    for (const auto& [k, v] : out.extras) doc[k] = v;
    ojson checks = ojson::array();
    for (const Row& row : out.rows) {
      std::string status = status_str(row.rep.status);
      if (row.conjecture && !strict) status = "reported";
      checks.push_back({{"id", row.rep.check_id},
                        {"params", pairs_json(row.rep.params)},
                        {"status", status},
                        {"witness", pairs_json(row.rep.witness)}});
    }
    doc["checks"] = checks;
    doc["all_passed"] = failures == 0;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::printf("qsym %s\n", kVersion);
    for (const Expansion& e : out.expansions) {
      std::printf("%s:\n", e.label.c_str());
      for (const auto& [p, c] : e.terms)
        std::printf("  %s(%s)  %s\n", e.basis.c_str(), partition_str(p).c_str(),
                    c.str().c_str());
    }
    for (const auto& [k, v] : out.extras)
      std::printf("%s: %s\n", k.c_str(), v.dump().c_str());
    for (const Row& row : out.rows) {
      std::string status = status_str(row.rep.status);
      if (row.conjecture && !strict) status = "reported";
      std::string params;
      for (const auto& [k, v] : row.rep.params) params += " " + k + "=" + v;
      std::printf("[%s] %s%s\n", status.c_str(), row.rep.check_id.c_str(), params.c_str());
      if (!row_ok(row))
        for (const auto& [k, v] : row.rep.witness)
          std::printf("    %s: %s\n", k.c_str(), v.c_str());
    }
    std::printf("%d hard check%s, %d failure%s\n", counted, counted == 1 ? "" : "s", failures,
                failures == 1 ? "" : "s");
  }
  return failures == 0 ? 0 : 1;
}

CheckReport equality_report(std::string id,
                            std::vector<std::pair<std::string, std::string>> params, bool equal,
                            std::string detail = "") {
  CheckReport rep;
  rep.check_id = std::move(id);
  rep.params = std::move(params);
  rep.status = equal ? CheckStatus::Pass : CheckStatus::Fail;
  if (!equal && !detail.empty()) rep.witness.push_back({"mismatch", std::move(detail)});
  return rep;
}

// g-expansion of the raising series: operator coefficient per zeta-shifted
// row multiset.
std::map<Partition, FieldScalar> raising_g_expansion(const EvalContext& ctx) {
  CoeffMemo memo;
  std::map<Partition, FieldScalar> out;
  for (const ThetaMatrix& sigma : theta_support(ctx.lambda, ctx.n)) {
    FieldScalar w = raising_operator_coeff(sigma, ctx, memo);
    if (w.is_zero()) continue;
    std::vector<int> a = ctx.lambda;
    std::vector<int> z = zeta(sigma);
    for (int k = 0; k < ctx.n; ++k) a[k] += z[k];
    std::sort(a.begin(), a.end(), std::greater<int>());
    auto [it, fresh] = out.emplace(normalize(a), w);
    if (!fresh) it->second += w;
    if (it->second.is_zero()) out.erase(it);
  }
  return out;
}

void run_schur(Output& out, const std::vector<Partition>& lambdas, int trials) {
  for (int trial = 0; trial < trials; ++trial) {
    FieldScalar q(generic_qt(trial).first);
    for (const Partition& lam : lambdas) {
      int n = std::max(1, length(lam));
      auto ctx = make_context(n, lam, q, q, 0, true);
      bool equal = raising_Q(lam, ctx) == jacobi_trudi_schur(lam, q);
      out.rows.push_back(
          {equality_report("schur-raising", {{"lambda", partition_str(lam)}, {"q", q.str()}},
                           equal),
           false});
    }
  }
}

void run_hall_littlewood(Output& out, const std::vector<Partition>& lambdas, int trials) {
  for (int trial = 0; trial < trials; ++trial) {
    FieldScalar t(generic_qt(trial).second);
    for (const Partition& lam : lambdas) {
      int n = std::max(1, length(lam));
      SymF want = macdonald_Q(lam, FieldScalar(0), t);
      auto ctx = make_context(n, lam, FieldScalar(0), t, 0, true);
      bool raise_ok = raising_Q(lam, ctx) == want;
      bool op_ok = hl_raising_Q(lam, n, t) == want;
      std::vector<std::pair<std::string, std::string>> params = {
          {"lambda", partition_str(lam)}, {"t", t.str()}};
      out.rows.push_back({equality_report("hl-raising", params, raise_ok), false});
      out.rows.push_back({equality_report("hl-operator", params, op_ok), false});
    }
  }
}

RatioSeries restrict_to(const RatioSeries& s, int N) {
  RatioSeries out = rs_zero(s.n, N);
  for (const auto& [d, c] : s.terms)
    if (rs_degree(d) <= N) out.terms.emplace(d, c);
  return out;
}

void run_truncation(Output& out, int trials, unsigned long seed) {
  for (int trial = 0; trial < trials; ++trial) {
    auto [qr, tr] = generic_qt(trial);
    FieldScalar q(qr), t(tr);
    for (int n = 2; n <= 3; ++n) {
      auto ctx = make_context(n, std::nullopt, q, t, seed + trial);
      int N = 3;
      bool f_ok = series_f(ctx, N).terms == restrict_to(series_f(ctx, N + 2), N).terms;
      bool e_ok =
          eigen_residual(ctx, N).terms == restrict_to(eigen_residual(ctx, N + 2), N).terms;
      std::vector<std::pair<std::string, std::string>> params = {
          {"n", std::to_string(n)}, {"N", std::to_string(N)}, {"q", q.str()}, {"t", t.str()}};
      out.rows.push_back({equality_report("truncation-f", params, f_ok), false});
      out.rows.push_back({equality_report("truncation-eigen", params, e_ok), false});
    }
  }
}

void run_two_route(Output& out, int trials, unsigned long seed) {
  for (int trial = 0; trial < trials; ++trial) {
    auto [qr, tr] = generic_qt(trial);
    FieldScalar q(qr), t(tr);
    std::vector<std::pair<std::string, std::string>> params = {{"q", q.str()}, {"t", t.str()}};

    auto ctx2 = make_context(2, std::nullopt, q, t, seed + trial);
    bool c2_ok = true;
    ThetaMatrix th2 = ThetaMatrix::zero(2);
    for (int theta = 0; theta <= 5 && c2_ok; ++theta) {
      th2.at(0, 1) = theta;
      c2_ok = c_coeff(th2, ctx2) == c2_closed(theta, ctx2);
    }
    out.rows.push_back({equality_report("two-route-c2", params, c2_ok), false});

    auto ctx3 = make_context(3, std::nullopt, q, t, seed + 100 + trial);
    bool c3_ok = true;
    for (const ThetaMatrix& th : theta_box(3, 2))
      if (!(c_coeff(th, ctx3) == c3_closed(th, ctx3))) c3_ok = false;
    out.rows.push_back({equality_report("two-route-c3", params, c3_ok), false});

    bool jj_ok = true, rec_ok = true;
    FieldScalar s12 = ctx2.sratio(0, 1);
    for (int theta = 0; theta <= 5; ++theta) {
      auto j = jj_coeff(theta, ctx2);
      if (!(j.difference == j.closed_form)) jj_ok = false;
      if (theta >= 1) {
        FieldScalar qp = q.pow(theta);
        FieldScalar ratio = t * (FieldScalar(1) - qp / t) * (FieldScalar(1) - qp / t * s12) /
                            ((FieldScalar(1) - qp) * (FieldScalar(1) - qp * s12));
        if (!(c2_closed(theta, ctx2) == ratio * c2_closed(theta - 1, ctx2))) rec_ok = false;
      }
    }
    out.rows.push_back({equality_report("jj-routes", params, jj_ok), false});
    out.rows.push_back({equality_report("jj-recurrence", params, rec_ok), false});
  }
}

std::vector<Partition> suite_lambdas(const std::string& lambda_arg, int max_weight,
                                     int max_parts) {
  std::vector<Partition> out;
  if (!lambda_arg.empty()) {
    out.push_back(parse_partition(lambda_arg));
    return out;
  }
  for (int d = 1; d <= max_weight; ++d)
    for (const Partition& lam : partitions_of(d, max_parts)) out.push_back(lam);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Macdonald raising-operator toolkit"};
  app.require_subcommand(1);

  std::string lambda_arg, q_arg = "2/3", t_arg = "5/7", order_arg = "qt", suite_arg;
  int n_arg = 2, N_arg = -1, bound_arg = -1, trials = 3;
  unsigned long seed = 1;
  bool json = false, strict = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", json, "emit a JSON report");
    cmd->add_flag("--strict", strict, "conjecture-tier checks affect the exit code");
  };
  auto add_qt = [&](CLI::App* cmd) {
    cmd->add_option("--q", q_arg, "q as an exact rational");
    cmd->add_option("--t", t_arg, "t as an exact rational");
  };

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "print macdonald_Q in the power sums");
  oracle_cmd->add_option("--lambda", lambda_arg, "partition, comma separated")->required();
  add_qt(oracle_cmd);
  add_common(oracle_cmd);

  CLI::App* raise_cmd = app.add_subcommand("raise", "raising-operator series vs the oracle");
  raise_cmd->add_option("--lambda", lambda_arg)->required();
  add_qt(raise_cmd);
  add_common(raise_cmd);

  CLI::App* ls_cmd = app.add_subcommand("ls", "inverted-Pieri series vs the oracle");
  ls_cmd->add_option("--lambda", lambda_arg)->required();
  add_qt(ls_cmd);
  add_common(ls_cmd);

  CLI::App* eigen_cmd = app.add_subcommand("eigen", "difference-operator eigenfunction residual");
  eigen_cmd->add_option("--n", n_arg, "variable count")->check(CLI::Range(1, 5));
  eigen_cmd->add_option("--N", N_arg, "truncation degree");
  eigen_cmd->add_option("--seed", seed, "free-s seed");
  eigen_cmd->add_option("--param-order", order_arg, "qt or tq")
      ->check(CLI::IsMember({"qt", "tq"}));
  add_qt(eigen_cmd);
  add_common(eigen_cmd);

  CLI::App* cmp_cmd = app.add_subcommand("compare-ls", "operator coefficients, both formulas");
  cmp_cmd->add_option("--n", n_arg)->check(CLI::Range(2, 4));
  cmp_cmd->add_option("--lambda", lambda_arg)->required();
  cmp_cmd->add_option("--bound", bound_arg, "theta entry bound");
  add_qt(cmp_cmd);
  add_common(cmp_cmd);

  CLI::App* id_cmd = app.add_subcommand("identity-n3", "hypergeometric series identity");
  id_cmd->add_option("--N", N_arg, "truncation degree");
  id_cmd->add_option("--seed", seed);
  add_qt(id_cmd);
  add_common(id_cmd);

  CLI::App* tilde_cmd = app.add_subcommand("n3-tilde", "recast coefficient identities");
  tilde_cmd->add_option("--bound", bound_arg, "theta entry bound");
  tilde_cmd->add_option("--seed", seed);
  add_qt(tilde_cmd);
  add_common(tilde_cmd);

  CLI::App* suite_cmd = app.add_subcommand("suite", "named check batteries");
  suite_cmd->add_option("name", suite_arg, "schur, hall-littlewood, truncation, or full")
      ->required()
      ->check(CLI::IsMember({"schur", "hall-littlewood", "truncation", "full"}));
  suite_cmd->add_option("--lambda", lambda_arg, "restrict to one partition");
  suite_cmd->add_option("--trials", trials, "generic points per check")->check(CLI::Range(1, 5));
  suite_cmd->add_option("--seed", seed);
  add_common(suite_cmd);

  CLI11_PARSE(app, argc, argv);

  Output out;
  std::string active = app.get_subcommands().front()->get_name();
  out.config["command"] = active;
  if (!lambda_arg.empty()) out.config["lambda"] = lambda_arg;
  if (eigen_cmd->parsed() || cmp_cmd->parsed()) out.config["n"] = n_arg;
  if (!suite_cmd->parsed()) {
    out.config["q"] = q_arg;
    out.config["t"] = t_arg;
  }
  if (suite_cmd->parsed()) {
    out.config["suite"] = suite_arg;
    out.config["trials"] = trials;
  }
  if (eigen_cmd->parsed() || id_cmd->parsed() || tilde_cmd->parsed() || suite_cmd->parsed())
    out.config["seed"] = seed;
  if (eigen_cmd->parsed()) out.config["param_order"] = order_arg;
  out.config["strict"] = strict;

  std::string active_check = active;
  try {
    FieldScalar q(rat_parse(q_arg)), t(rat_parse(t_arg));

    if (oracle_cmd->parsed()) {
      Partition lam = parse_partition(lambda_arg);
      SymF f = macdonald_Q(lam, q, t);
      out.expansions.push_back({"macdonald_Q", basis_str(f.basis), f.terms});
    } else if (raise_cmd->parsed()) {
      active_check = "raise-oracle";
      Partition lam = parse_partition(lambda_arg);
      int n = std::max(1, length(lam));
      auto ctx = make_context(n, lam, q, t);
      SymF f = raising_Q(lam, ctx);
      out.expansions.push_back({"g_expansion", "g", raising_g_expansion(ctx)});
      out.expansions.push_back({"power_sum_expansion", basis_str(f.basis), f.terms});
      bool equal = f == macdonald_Q(lam, q, t);
      out.extras.push_back({"matches_oracle", ojson(equal)});
      out.rows.push_back({equality_report("raise-oracle",
                                          {{"lambda", partition_str(lam)},
                                           {"q", q.str()},
                                           {"t", t.str()}},
                                          equal),
                          false});
    } else if (ls_cmd->parsed()) {
      active_check = "ls-oracle";
      Partition lam = normalize(parse_partition(lambda_arg));
      SymF f = ls_Q(lam, q, t);
      out.expansions.push_back({"power_sum_expansion", basis_str(f.basis), f.terms});
      bool equal = f == macdonald_Q(lam, q, t);
      out.extras.push_back({"matches_oracle", ojson(equal)});
      out.rows.push_back({equality_report("ls-oracle",
                                          {{"lambda", partition_str(lam)},
                                           {"q", q.str()},
                                           {"t", t.str()}},
                                          equal),
                          false});
    } else if (eigen_cmd->parsed()) {
      active_check = "eigen";
      if (N_arg < 0) N_arg = n_arg == 2 ? 5 : 3;
      auto ctx = make_context(n_arg, std::nullopt, q, t, seed);
      ParamOrder order = order_arg == "qt" ? ParamOrder::QT : ParamOrder::TQ;
      RatioSeries res = eigen_residual(ctx, N_arg, order);
      CheckReport rep;
      rep.check_id = "eigen";
      rep.params = {{"n", std::to_string(n_arg)},  {"N", std::to_string(N_arg)},
                    {"q", q.str()},                {"t", t.str()},
                    {"seed", std::to_string(seed)}, {"param_order", order_arg}};
      rep.status = res.terms.empty() ? CheckStatus::Pass : CheckStatus::Fail;
      rep.witness.push_back({"residual_terms", std::to_string(res.terms.size())});
      if (!res.terms.empty()) {
        const auto& [d, c] = *res.terms.begin();
        std::string ds;
        for (size_t i = 0; i < d.size(); ++i) ds += (i ? "," : "") + std::to_string(d[i]);
        rep.witness.push_back({"first_term", "y^(" + ds + ") coeff " + c.str()});
      }
      out.rows.push_back({rep, n_arg >= 3});
    } else if (cmp_cmd->parsed()) {
      active_check = "compare-ls";
      Partition lam = parse_partition(lambda_arg);
      if (bound_arg < 0) bound_arg = n_arg == 2 ? 4 : (n_arg == 3 ? 3 : 2);
      auto rep = compare_operator_coeffs(n_arg, lam, bound_arg, q, t);
      out.rows.push_back({rep, n_arg >= 4});
    } else if (id_cmd->parsed()) {
      active_check = "identity-n3";
      if (N_arg < 0) N_arg = 4;
      auto ctx = make_context(3, std::nullopt, q, t, seed);
      out.rows.push_back({identity_n3(ctx, N_arg), true});
    } else if (tilde_cmd->parsed()) {
      active_check = "n3-tilde";
      if (bound_arg < 0) bound_arg = 2;
      auto ctx = make_context(3, std::nullopt, q, t, seed);
      long checked = 0, failed = 0;
      std::string first;
      for (const ThetaMatrix& th : theta_box(3, bound_arg)) {
        auto rep = n3_tilde_check(th, ctx);
        ++checked;
        if (rep.status != CheckStatus::Pass) {
          ++failed;
          if (first.empty()) first = theta_str(th);
        }
      }
      CheckReport rep;
      rep.check_id = "n3-tilde";
      rep.params = {{"bound", std::to_string(bound_arg)},
                    {"q", q.str()},
                    {"t", t.str()},
                    {"seed", std::to_string(seed)}};
      rep.status = failed == 0 ? CheckStatus::Pass : CheckStatus::Fail;
      rep.witness = {{"checked", std::to_string(checked)}, {"failed", std::to_string(failed)}};
      if (!first.empty()) rep.witness.push_back({"first_failure", first});
      out.rows.push_back({rep, false});
    } else if (suite_cmd->parsed()) {
      active_check = "suite " + suite_arg;
      if (suite_arg == "schur" || suite_arg == "full")
        run_schur(out, suite_lambdas(lambda_arg, 4, -1), trials);
      if (suite_arg == "hall-littlewood" || suite_arg == "full")
        run_hall_littlewood(out, suite_lambdas(lambda_arg, 4, 3), trials);
      if (suite_arg == "truncation" || suite_arg == "full") run_truncation(out, trials, seed);
      if (suite_arg == "full") run_two_route(out, trials, seed);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error in " << active_check << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error in " << active_check << ": " << e.what() << "\n";
    return 1;
  }

  return emit(out, json, strict);
}
