#include <catch2/catch_amalgamated.hpp>

#include "qsym/raising.hpp"
#include "qsym/series.hpp"

using namespace qsym;

namespace {

const FieldScalar kQ(Rat(2, 3));
const FieldScalar kT(Rat(5, 7));

FieldScalar coeff(const RatioSeries& s, const std::vector<int>& d) {
  auto it = s.terms.find(d);
  return it == s.terms.end() ? FieldScalar(0) : it->second;
}

RatioSeries restrict_to(const RatioSeries& s, int N) {
  RatioSeries out = rs_zero(s.n, N);
  for (const auto& [d, c] : s.terms)
    if (rs_degree(d) <= N) out.terms.emplace(d, c);
  return out;
}

}  // namespace

TEST_CASE("ratio series ring", "[series]") {
  RatioSeries one = rs_one(2, 3);
  CHECK(coeff(one, {0}) == FieldScalar(1));

  RatioSeries f = one;
  rs_add_term(f, {1}, FieldScalar(1));
  RatioSeries sq = rs_mul(f, f);
  CHECK(coeff(sq, {1}) == FieldScalar(2));
  CHECK(coeff(sq, {2}) == FieldScalar(1));

  SECTION("multiplication truncates") {
    RatioSeries g = rs_one(2, 1);
    rs_add_term(g, {1}, FieldScalar(1));
    RatioSeries h = rs_mul(g, g);
    CHECK(coeff(h, {1}) == FieldScalar(2));
    CHECK(h.terms.count({2}) == 0);
  }
  SECTION("zero coefficients are not stored") {
    RatioSeries z = rs_sub(f, f);
    CHECK(z.terms.empty());
    rs_add_term(z, {1}, FieldScalar(0));
    CHECK(z.terms.empty());
  }
}

TEST_CASE("ratio embedding", "[series]") {
  CHECK(embed_ratio(3, 0, 2, 2) == std::vector<int>{2, 2});
  CHECK(embed_ratio(3, 1, 2, 1) == std::vector<int>{0, 1});
  CHECK(embed_ratio(2, 0, 1, 3) == std::vector<int>{3});
  CHECK(rs_degree(embed_ratio(4, 0, 3, 1)) == 3);
}

TEST_CASE("vandermonde-type prefactor", "[series]") {
  RatioSeries p2 = ratio_prefactor(2, 4);
  CHECK(coeff(p2, {0}) == FieldScalar(1));
  CHECK(coeff(p2, {1}) == FieldScalar(-1));
  CHECK(p2.terms.size() == 2);

  // (1 - y1)(1 - y1 y2)(1 - y2)
  RatioSeries p3 = ratio_prefactor(3, 4);
  CHECK(coeff(p3, {0, 0}) == FieldScalar(1));
  CHECK(coeff(p3, {1, 0}) == FieldScalar(-1));
  CHECK(coeff(p3, {0, 1}) == FieldScalar(-1));
  CHECK(coeff(p3, {1, 1}).is_zero());  // -y1y2 + y1*y2
  CHECK(coeff(p3, {2, 1}) == FieldScalar(1));
  CHECK(coeff(p3, {1, 2}) == FieldScalar(1));
  CHECK(coeff(p3, {2, 2}) == FieldScalar(-1));
}

TEST_CASE("series f", "[series]") {
  auto ctx2 = make_context(2, std::nullopt, kQ, kT, 31);
  auto ctx3 = make_context(3, std::nullopt, kQ, kT, 32);

  SECTION("constant term is 1") {
    CHECK(coeff(series_f(ctx2, 4), {0}) == FieldScalar(1));
    CHECK(coeff(series_f(ctx3, 3), {0, 0}) == FieldScalar(1));
  }
  SECTION("n = 2 coefficients are the jing-jozefiak differences") {
    RatioSeries f = series_f(ctx2, 5);
    for (int theta = 0; theta <= 5; ++theta)
      CHECK(coeff(f, {theta}) == jj_coeff(theta, ctx2).difference);
  }
  SECTION("t = q collapses to the prefactor") {
    auto ctx = make_context(3, std::nullopt, kQ, kQ, 33, true);
    RatioSeries f = series_f(ctx, 4);
    CHECK(f.terms == ratio_prefactor(3, 4).terms);
  }
  SECTION("truncation margin does not change low coefficients") {
    CHECK(series_f(ctx3, 3).terms == restrict_to(series_f(ctx3, 5), 3).terms);
  }
}

TEST_CASE("difference operator", "[series]") {
  auto ctx = make_context(2, std::nullopt, kQ, kT, 41);

  SECTION("constant input") {
    RatioSeries out = apply_D1(rs_one(2, 3), ctx, 3);
    CHECK(coeff(out, {0}) == ctx.s[0] + ctx.s[1]);
  }
  SECTION("n = 1 is a pure multiplier") {
    auto ctx1 = make_context(1, std::nullopt, kQ, kT, 42);
    RatioSeries out = apply_D1(rs_one(1, 0), ctx1, 0);
    REQUIRE(out.terms.size() == 1);
    CHECK(coeff(out, {}) == ctx1.s[0]);
  }
  SECTION("degree locality") {
    RatioSeries f = rs_one(2, 3);
    rs_add_term(f, {1}, FieldScalar(Rat(1, 2)));
    rs_add_term(f, {3}, FieldScalar(5));
    RatioSeries g = f;
    g.terms[{3}] = FieldScalar(7);  // perturb above the watched degree
    RatioSeries df = apply_D1(f, ctx, 3);
    RatioSeries dg = apply_D1(g, ctx, 3);
    for (int d = 0; d <= 2; ++d) CHECK(coeff(df, {d}) == coeff(dg, {d}));
    CHECK_FALSE(coeff(df, {3}) == coeff(dg, {3}));
  }
}

TEST_CASE("eigenfunction residual", "[series]") {
  auto ctx = make_context(2, std::nullopt, kQ, kT, 51);
  SECTION("n = 2 residual vanishes") {
    CHECK(eigen_residual(ctx, 5).terms.empty());
  }
  SECTION("swapped parameter order does not") {
    CHECK_FALSE(eigen_residual(ctx, 4, ParamOrder::TQ).terms.empty());
  }
  SECTION("n = 3 residual vanishes") {
    auto ctx3 = make_context(3, std::nullopt, kQ, kT, 52);
    CHECK(eigen_residual(ctx3, 3).terms.empty());
  }
}

TEST_CASE("basic hypergeometric coefficients", "[series]") {
  FieldScalar s(Rat(11, 13));
  SECTION("unit numerator parameter truncates the series") {
    auto v = phi21_truncated(FieldScalar(1), s, kQ * s, kQ, 4);
    REQUIRE(v.size() == 5);
    CHECK(v[0] == FieldScalar(1));
    for (int m = 1; m <= 4; ++m) CHECK(v[m].is_zero());
  }
  SECTION("term ratio recurrence") {
    auto v = phi21_truncated(kQ / kT, s, kQ * s, kQ, 3);
    FieldScalar expect = q_pochhammer(kQ / kT, kQ, 2) * q_pochhammer(s, kQ, 2) /
                         (q_pochhammer(kQ, kQ, 2) * q_pochhammer(kQ * s, kQ, 2));
    CHECK(v[2] == expect);
  }
  SECTION("q = 0 coefficients are all 1") {
    // with the argument t x_j/x_i this is the geometric series in t
    FieldScalar zero(0);
    auto v = phi21_truncated(zero, zero, zero, zero, 3);
    for (const auto& c : v) CHECK(c == FieldScalar(1));
  }
  SECTION("vanishing denominator is reported with its index") {
    try {
      phi21_truncated(s, s, kQ.pow(-2), kQ, 5);
      FAIL("expected ZeroDenominator");
    } catch (const ZeroDenominator& e) {
      CHECK(e.index == 3);
    }
  }
}

TEST_CASE("n = 3 series identity", "[series]") {
  auto ctx = make_context(3, std::nullopt, kQ, kT, 61);

  SECTION("g-side constant term") {
    CHECK(coeff(series_g3(ctx, 3), {0, 0}) == FieldScalar(1));
  }
  SECTION("identity holds to low degree") {
    auto rep = identity_n3(ctx, 3);
    CHECK(rep.status == CheckStatus::Pass);
  }
  SECTION("t = q collapse on both sides") {
    auto ctxq = make_context(3, std::nullopt, kQ, kQ, 62, true);
    CHECK(identity_n3(ctxq, 4).status == CheckStatus::Pass);
    CHECK(series_g3(ctxq, 4).terms == ratio_prefactor(3, 4).terms);
  }
  SECTION("q = 0 gives the hall-littlewood kernel") {
    auto ctx0 = make_context(3, Partition{0, 0, 0}, FieldScalar(0), kT, 0, true);
    int N = 3;
    RatioSeries expect = rs_one(3, N);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        RatioSeries num = rs_one(3, N);
        rs_add_term(num, embed_ratio(3, i, j, 1), FieldScalar(-1));
        RatioSeries den = rs_zero(3, N);
        for (int m = 0; rs_degree(embed_ratio(3, i, j, m)) <= N; ++m)
          rs_add_term(den, embed_ratio(3, i, j, m), kT.pow(m));
        expect = rs_mul(expect, rs_mul(num, den));
      }
    CHECK(series_g3(ctx0, N).terms == expect.terms);
  }
}
