#include "doctest.h"

#include <map>
#include <random>
#include <vector>

#include "spinnil/demazure.hpp"
#include "spinnil/linalg.hpp"

#include "oracles.hpp"

using namespace spinnil;

namespace {

SkewPoly sparse(const std::string& text, int rank) { return parse_poly<Int, true>(text, rank); }
EvenPoly eparse(const std::string& text, int rank) { return parse_poly<Int, false>(text, rank); }

SkewPoly xpow(int rank, int i, int k) {
  Exponents e(rank, 0);
  e[i - 1] = k;
  return SkewPoly::monomial(rank, e, Int(1));
}

// sum_{j=1}^{k} sign^{j-1} x_a^{j-1} x_b^{k-j}, assembled by explicit products
SkewPoly alternating_sum(int rank, int a, int b, int k, int sign) {
  SkewPoly out = SkewPoly::zero(rank);
  Int c(1);
  for (int j = 1; j <= k; ++j) {
    out += xpow(rank, a, j - 1) * xpow(rank, b, k - j) * SkewPoly::constant(rank, c);
    c *= sign;
  }
  return out;
}

// Matrix of op on the given domain monomials, rows indexed by codomain_index.
template <bool Skew>
RatMat op_matrix(const Demazure& op, const std::vector<Exponents>& domain,
                 const std::map<Exponents, int>& codomain_index) {
  RatMat m(codomain_index.size(), RatVec(domain.size(), Rat(0)));
  for (std::size_t j = 0; j < domain.size(); ++j) {
    auto img = op(BasicPoly<Int, Skew>::monomial(op.rank(), domain[j], Int(1)));
    for (const auto& [e, c] : img.terms()) m[codomain_index.at(e)][j] = Rat(c);
  }
  return m;
}

std::map<Exponents, int> index_of(const std::vector<Exponents>& monos) {
  std::map<Exponents, int> idx;
  for (const auto& e : monos) idx.emplace(e, static_cast<int>(idx.size()));
  return idx;
}

}  // namespace

TEST_SUITE_BEGIN("demazure");

TEST_CASE("base cases on single variables") {
  Demazure a1(Variant::spin, WeylType::A, 3, 1);
  CHECK(a1(sparse("x1", 3)) == sparse("1", 3));
  CHECK(a1(sparse("x2", 3)) == sparse("1", 3));
  CHECK(a1(sparse("x3", 3)).is_zero());

  Demazure b3(Variant::spin, WeylType::B, 3, 3);
  CHECK(b3(sparse("x3", 3)) == sparse("1", 3));
  CHECK(b3(sparse("x1", 3)).is_zero());
  CHECK(b3(sparse("x2", 3)).is_zero());

  Demazure d3(Variant::spin, WeylType::D, 3, 3);
  CHECK(d3(sparse("x3", 3)) == sparse("-1", 3));
  CHECK(d3(sparse("x2", 3)) == sparse("1", 3));
  CHECK(d3(sparse("x1", 3)).is_zero());
}

TEST_CASE("small frozen values") {
  Demazure a1(Variant::spin, WeylType::A, 2, 1);
  CHECK(a1(sparse("x1*x2", 2)).is_zero());
  CHECK(a1(sparse("x1^2", 2)) == sparse("x1 - x2", 2));
  CHECK(a1(sparse("x1^2*x2", 2)) == sparse("x1*x2", 2));

  Demazure b2(Variant::spin, WeylType::B, 2, 2);
  CHECK(b2(sparse("x2^3", 2)) == sparse("x2^2", 2));
  CHECK(b2(sparse("x2^2", 2)).is_zero());
  CHECK(b2(sparse("x1*x2", 2)) == sparse("-x1", 2));

  Demazure d2(Variant::spin, WeylType::D, 2, 2);
  CHECK(d2(sparse("x2^2", 2)) == sparse("-x1 - x2", 2));
  CHECK(d2(sparse("x1^2", 2)) == sparse("x1 + x2", 2));
  CHECK(d2(sparse("x1*x2", 2)).is_zero());

  Demazure ea(Variant::even, WeylType::A, 2, 1);
  CHECK(ea(eparse("x1^2", 2)) == eparse("x1 + x2", 2));
  CHECK(ea(eparse("x1^3", 2)) == eparse("x1^2 + x1*x2 + x2^2", 2));
  CHECK(ea(eparse("x1*x2", 2)).is_zero());

  Demazure eb(Variant::even, WeylType::B, 2, 2);
  CHECK(eb(eparse("x2", 2)) == eparse("1", 2));
  CHECK(eb(eparse("x2^2", 2)).is_zero());
  CHECK(eb(eparse("x2^3", 2)) == eparse("x2^2", 2));
  CHECK(eb(eparse("x1", 2)).is_zero());

  Demazure ed(Variant::even, WeylType::D, 2, 2);
  CHECK(ed(eparse("x2", 2)) == eparse("1", 2));
  CHECK(ed(eparse("x2^2", 2)) == eparse("x2 - x1", 2));
  CHECK(ed(eparse("x1*x2", 2)).is_zero());
}

TEST_CASE("closed forms on pure powers") {
  for (int n = 2; n <= 4; ++n) {
    for (int k = 0; k <= 8; ++k) {
      for (int i = 1; i <= n - 1; ++i) {
        Demazure op(Variant::spin, WeylType::A, n, i);
        CHECK(op(xpow(n, i, k)) == alternating_sum(n, i + 1, i, k, -1));
        CHECK(op(xpow(n, i + 1, k)) == alternating_sum(n, i, i + 1, k, -1));
      }
      Demazure bn(Variant::spin, WeylType::B, n, n);
      SkewPoly bexpect = k % 2 == 1 ? xpow(n, n, k - 1) : SkewPoly::zero(n);
      CHECK(bn(xpow(n, n, k)) == bexpect);
      Demazure dn(Variant::spin, WeylType::D, n, n);
      CHECK(dn(xpow(n, n, k)) ==
            -(alternating_sum(n, n - 1, n, k, 1)));
      CHECK(dn(xpow(n, n - 1, k)) == alternating_sum(n, n, n - 1, k, 1));
    }
  }
}

TEST_CASE("twisted Leibniz rule on random pairs") {
  std::mt19937 rng(20240811);
  for (WeylType t : {WeylType::A, WeylType::B, WeylType::D}) {
    for (int n = (t == WeylType::D ? 2 : 2); n <= 4; ++n) {
      for (int index = 1; index <= generator_count(t, n); ++index) {
        Demazure op(Variant::spin, t, n, index);
        auto sigma = op.action();
        for (int trial = 0; trial < 8; ++trial) {
          auto f = test::random_poly<Int, true>(rng, n, 5, 4);
          auto g = test::random_poly<Int, true>(rng, n, 5, 4);
          CHECK(op(f * g) == op(f) * g + sigma(f) * op(g));
        }
        Demazure eop(Variant::even, t, n, index);
        auto esigma = eop.action();
        for (int trial = 0; trial < 8; ++trial) {
          auto f = test::random_poly<Int, false>(rng, n, 5, 4);
          auto g = test::random_poly<Int, false>(rng, n, 5, 4);
          CHECK(eop(f * g) == eop(f) * g + esigma(f) * eop(g));
        }
      }
    }
  }
}

TEST_CASE("operator words") {
  auto f = sparse("x1^2*x2 + x3", 3);
  CHECK(apply_word(Variant::spin, WeylType::A, 3, {}, f) == f);
  CHECK(apply_word(Variant::spin, WeylType::B, 3, {3, 3}, f).is_zero());
  for (const auto& e : monomials_up_to_degree(3, 5)) {
    auto m = SkewPoly::monomial(3, e, Int(1));
    CHECK(apply_word(Variant::spin, WeylType::A, 3, {1, 2, 1}, m) ==
          apply_word(Variant::spin, WeylType::A, 3, {2, 1, 2}, m));
  }
  // rightmost letter acts first
  auto g = sparse("x2^3", 2);
  auto via_word = apply_word(Variant::spin, WeylType::B, 2, {1, 2}, g);
  Demazure d1(Variant::spin, WeylType::B, 2, 1);
  Demazure d2(Variant::spin, WeylType::B, 2, 2);
  CHECK(via_word == d1(d2(g)));
  CHECK(via_word == sparse("x2 - x1", 2));
  CHECK(d2(d1(g)) == sparse("x1", 2));
}

TEST_CASE("defining relations hold on monomials") {
  for (int n = 1; n <= 3; ++n) {
    auto r = verify_relations(Variant::spin, WeylType::A, n, 6);
    CHECK(r.all_pass());
    r = verify_relations(Variant::spin, WeylType::B, n, 6);
    CHECK(r.all_pass());
    r = verify_relations(Variant::even, WeylType::A, n, 6);
    CHECK(r.all_pass());
    r = verify_relations(Variant::even, WeylType::B, n, 6);
    CHECK(r.all_pass());
    if (n >= 2) {
      r = verify_relations(Variant::spin, WeylType::D, n, 6);
      CHECK(r.all_pass());
      r = verify_relations(Variant::even, WeylType::D, n, 6);
      CHECK(r.all_pass());
    }
  }
  CHECK(division_not_exact_events().load() == 0);
}

TEST_CASE("relation report carries families and counterexamples fail loudly") {
  auto r = verify_relations(Variant::spin, WeylType::B, 2, 4);
  CHECK(r.family_count() >= 8);
  for (const auto& res : r.results) {
    CHECK(res.pass);
    CHECK(res.counterexample.empty());
    CHECK(!res.desc.empty());
  }
  // a wrong relation is detected
  OpExpr bad;
  bad.add(1, {D(1), D(2)});
  auto val = bad(Variant::spin, WeylType::B, 2, sparse("x1*x2", 2));
  CHECK(!val.is_zero());
}

TEST_CASE("image equals kernel in each degree") {
  struct Case {
    WeylType t;
    int n;
    int index;
  };
  std::vector<Case> cases;
  for (int n = 2; n <= 3; ++n) {
    for (int i = 1; i < n; ++i) cases.push_back({WeylType::A, n, i});
    cases.push_back({WeylType::B, n, n});
    cases.push_back({WeylType::D, n, n});
  }
  for (const auto& c : cases) {
    Demazure op(Variant::spin, c.t, c.n, c.index);
    for (int d = 1; d <= 6; ++d) {
      auto dom = monomials_of_degree(c.n, d);
      auto cod = monomials_of_degree(c.n, d - 1);
      auto up = monomials_of_degree(c.n, d + 1);
      auto cod_idx = index_of(cod);
      auto dom_idx = index_of(dom);
      auto kernel = rat_kernel(op_matrix<true>(op, dom, cod_idx));
      RatMat image;
      for (const auto& e : up) {
        auto img = op(SkewPoly::monomial(c.n, e, Int(1)));
        RatVec v(dom.size(), Rat(0));
        for (const auto& [m, coeff] : img.terms()) v[dom_idx.at(m)] = Rat(coeff);
        image.push_back(std::move(v));
      }
      CHECK(rat_spans_equal(kernel, image));
    }
  }
}

TEST_CASE("skew and plain adjacent-swap kernels agree on even-exponent polynomials") {
  for (int n = 2; n <= 3; ++n) {
    for (int dd = 1; 2 * dd <= 8; ++dd) {
      const int d = 2 * dd;
      std::vector<Exponents> evens;
      for (const auto& e : monomials_of_degree(n, d)) {
        bool ok = true;
        for (int v : e) ok = ok && v % 2 == 0;
        if (ok) evens.push_back(e);
      }
      auto cod_idx = index_of(monomials_of_degree(n, d - 1));
      RatMat spin_stack, even_stack;
      for (int i = 1; i < n; ++i) {
        auto ms = op_matrix<true>(Demazure(Variant::spin, WeylType::A, n, i), evens, cod_idx);
        auto me = op_matrix<false>(Demazure(Variant::even, WeylType::A, n, i), evens, cod_idx);
        spin_stack.insert(spin_stack.end(), ms.begin(), ms.end());
        even_stack.insert(even_stack.end(), me.begin(), me.end());
      }
      auto ks = rat_kernel(std::move(spin_stack));
      auto ke = rat_kernel(std::move(even_stack));
      CHECK(rat_spans_equal(ks, ke));
    }
  }
}

TEST_CASE("expression text") {
  OpExpr e;
  e.add(1, {X(1), D(2)}).add(-1, {D(2), X(1)}).add(-1, {});
  CHECK(e.str() == "x1 d2 - d2 x1 - 1");
}

TEST_SUITE_END();
