#include "doctest.h"

#include <random>

#include "spinnil/symfun.hpp"

#include "oracles.hpp"

using namespace spinnil;

namespace {

SkewPoly sparse(const std::string& text, int rank) { return parse_poly<Int, true>(text, rank); }

GenExpr random_expr(std::mt19937& rng, WeylType t, int n, int max_degree, int term_count) {
  GenExpr g;
  g.rank = n;
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int trial = 0; trial < term_count; ++trial) {
    Exponents mu(n, 0);
    int degree = 0;
    for (int k = n; k >= 1; --k) {
      int d = elementary_degree(t, n, k);
      int cap = (max_degree - degree) / d;
      if (cap <= 0) continue;
      std::uniform_int_distribution<int> pick(0, cap);
      mu[k - 1] = pick(rng);
      degree += mu[k - 1] * d;
    }
    g.add_term(mu, Int(coeff(rng)));
  }
  return g;
}

}  // namespace

TEST_SUITE_BEGIN("symfun");

TEST_CASE("generator polynomials") {
  CHECK(elementary<true>(WeylType::B, 2, 1) == sparse("x1^2 + x2^2", 2));
  CHECK(elementary<true>(WeylType::B, 2, 2) == sparse("x1^2*x2^2", 2));
  CHECK(elementary<true>(WeylType::D, 3, 3) == sparse("x1*x2*x3", 3));
  CHECK(elementary<true>(WeylType::D, 3, 2) ==
        sparse("x1^2*x2^2 + x1^2*x3^2 + x2^2*x3^2", 3));
  CHECK(elementary<false>(WeylType::A, 3, 2) ==
        parse_poly<Int, false>("x1*x2 + x1*x3 + x2*x3", 3));
  CHECK(elementary<false>(WeylType::D, 2, 2) == parse_poly<Int, false>("x1*x2", 2));
  CHECK_THROWS_AS(elementary<true>(WeylType::B, 2, 3), std::out_of_range);
  CHECK_THROWS_AS(elementary<true>(WeylType::B, 2, 0), std::out_of_range);
  CHECK_THROWS_AS(elementary<true>(WeylType::A, 2, 1), std::invalid_argument);
}

TEST_CASE("top generators of types B and D") {
  for (int n = 2; n <= 3; ++n) {
    auto top_b = elementary<true>(WeylType::B, n, n);
    auto top_d = elementary<true>(WeylType::D, n, n);
    int csign = (n * (n - 1) / 2) % 2 == 0 ? 1 : -1;
    auto square = top_d * top_d;
    CHECK(top_b * SkewPoly::constant(n, Int(csign)) == square);
  }
}

TEST_CASE("kernel membership with certificates") {
  auto cert = in_lambda(WeylType::B, 2, sparse("x1^2 + x2^2", 2));
  CHECK(cert.member);
  REQUIRE(cert.per_op.size() == 2);
  CHECK(cert.per_op[0] == std::pair<std::string, bool>{"d1", true});
  CHECK(cert.per_op[1] == std::pair<std::string, bool>{"d2", true});

  auto bad = in_lambda(WeylType::B, 1, sparse("x1", 1));
  CHECK(!bad.member);
  CHECK(bad.per_op[0].second == false);

  CHECK(in_lambda(WeylType::D, 2, sparse("x1*x2", 2)).member);
}

TEST_CASE("all generators lie in the kernel intersection") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= n; ++k) {
      CHECK(in_lambda(WeylType::B, n, elementary<true>(WeylType::B, n, k)).member);
      CHECK(in_lambda(WeylType::B, n, elementary<false>(WeylType::B, n, k)).member);
      if (n >= 2) {
        CHECK(in_lambda(WeylType::D, n, elementary<true>(WeylType::D, n, k)).member);
        CHECK(in_lambda(WeylType::D, n, elementary<false>(WeylType::D, n, k)).member);
      }
      CHECK(in_lambda(WeylType::A, n, elementary<false>(WeylType::A, n, k)).member);
    }
}

TEST_CASE("type B generators live inside the type D ring") {
  for (int n = 2; n <= 3; ++n)
    for (int k = 1; k <= n; ++k)
      CHECK(in_lambda(WeylType::D, n, elementary<true>(WeylType::B, n, k)).member);
}

TEST_CASE("generators commute pairwise") {
  for (WeylType t : {WeylType::B, WeylType::D}) {
    for (int n = (t == WeylType::D ? 2 : 1); n <= 3; ++n)
      for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          auto a = elementary<true>(t, n, k);
          auto b = elementary<true>(t, n, l);
          CHECK(a * b == b * a);
        }
  }
}

TEST_CASE("expression in generators: frozen values") {
  auto g = express_in_elementary<true>(WeylType::B, 2, sparse("x1^2*x2^2", 2));
  CHECK(g.str() == "e2");
  auto sq = sparse("x1^2 + x2^2", 2) * sparse("x1^2 + x2^2", 2);
  auto g2 = express_in_elementary<true>(WeylType::B, 2, sq);
  CHECK(g2.str() == "e1^2");
  auto g3 = express_in_elementary<true>(WeylType::D, 2, sparse("x1*x2", 2));
  CHECK(g3.str() == "e2");
  // (e_2^d)^2 = -x1^2 x2^2 in the skew ring
  auto g4 = express_in_elementary<true>(WeylType::D, 2, sparse("-x1^2*x2^2", 2));
  CHECK(g4.str() == "e2^2");
  CHECK(expand_elementary<true>(WeylType::D, 2, g4) == sparse("-x1^2*x2^2", 2));
}

TEST_CASE("inexpressible inputs are rejected") {
  CHECK_THROWS_AS(express_in_elementary<true>(WeylType::B, 2, sparse("x1", 2)),
                  NotExpressibleError);
  CHECK_THROWS_AS(express_in_elementary<true>(WeylType::B, 2, sparse("x1^2", 2)),
                  NotExpressibleError);  // not symmetric
  CHECK_THROWS_AS(express_in_elementary<true>(WeylType::D, 2, sparse("x1*x2^2", 2)),
                  NotExpressibleError);  // mixed parities
}

TEST_CASE("express then expand is the identity on generator expressions") {
  std::mt19937 rng(77);
  for (WeylType t : {WeylType::B, WeylType::D}) {
    for (int n = (t == WeylType::D ? 2 : 1); n <= 3; ++n) {
      for (int trial = 0; trial < 30; ++trial) {
        GenExpr g = random_expr(rng, t, n, 16, 3);
        auto fs = expand_elementary<true>(t, n, g);
        CHECK(express_in_elementary<true>(t, n, fs) == g);
        auto fe = expand_elementary<false>(t, n, g);
        CHECK(express_in_elementary<false>(t, n, fe) == g);
      }
    }
  }
  for (int n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 30; ++trial) {
      GenExpr g = random_expr(rng, WeylType::A, n, 10, 3);
      auto f = expand_elementary<false>(WeylType::A, n, g);
      CHECK(express_in_elementary<false>(WeylType::A, n, f) == g);
    }
  }
}

TEST_CASE("graded rank series") {
  QPiSeries b1;
  for (int k = 0; k <= 3; ++k) b1.add_term(4 * k, 0, 1);
  CHECK(hilbert_series(Variant::spin, WeylType::B, 1, 12) == b1);

  QPiSeries d2 = QPiSeries::one() + QPiSeries::monomial(4, 0, 2) + QPiSeries::monomial(8, 0, 3);
  CHECK(hilbert_series(Variant::spin, WeylType::D, 2, 8) == d2);

  for (int n = 1; n <= 3; ++n)
    CHECK(hilbert_series(Variant::spin, WeylType::B, n, 40) ==
          lambda_closed_rank(WeylType::B, n, 40));
  for (int n = 2; n <= 3; ++n)
    CHECK(hilbert_series(Variant::spin, WeylType::D, n, 40) ==
          lambda_closed_rank(WeylType::D, n, 40));
  CHECK(hilbert_series(Variant::even, WeylType::B, 2, 30) ==
        hilbert_series(Variant::spin, WeylType::B, 2, 30));
}

TEST_CASE("shifted generator identity") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& check : kk_identity_check(n)) CHECK(check.pass);
  // n=2, k=1: e'_1 = x2^2 = (x1^2 + x2^2) - x1^2
  CHECK(kk_identity_check(2)[1].k == 1);
  CHECK(kk_identity_check(2)[1].pass);
}

TEST_CASE("even operator kernels equal classical invariants") {
  for (WeylType t : {WeylType::A, WeylType::B, WeylType::D}) {
    for (int n = (t == WeylType::D ? 2 : 1); n <= 2; ++n)
      for (int d = 1; d <= 5; ++d) CHECK(even_invariants_match_kernel(t, n, d));
  }
  CHECK(even_invariants_match_kernel(WeylType::B, 3, 4));
}

TEST_SUITE_END();
