#include "doctest.h"

#include <numeric>
#include <random>

#include "spinnil/schubert.hpp"

#include "oracles.hpp"

using namespace spinnil;

namespace {

SkewPoly sparse(const std::string& text, int rank) { return parse_poly<Int, true>(text, rank); }

Int pow2(int e) {
  Int v = 1;
  return v << e;
}

}  // namespace

TEST_SUITE_BEGIN("schubert");

TEST_CASE("staircase exponents") {
  CHECK(staircase(WeylType::B, 2) == Exponents{3, 1});
  CHECK(staircase(WeylType::B, 3) == Exponents{5, 3, 1});
  CHECK(staircase(WeylType::D, 3) == Exponents{4, 2, 0});
  CHECK(staircase(WeylType::A, 3) == Exponents{2, 1, 0});
}

TEST_CASE("known family members") {
  CHECK(schubert<true>(WeylType::B, 1, weyl_longest(WeylType::B, 1)) == sparse("x1", 1));
  auto e1 = weyl_identity(WeylType::B, 1);
  auto se = schubert<true>(WeylType::B, 1, e1);
  CHECK((se == sparse("1", 1) || se == sparse("-1", 1)));

  CHECK(schubert<true>(WeylType::D, 2, weyl_identity(WeylType::D, 2)) == sparse("2", 2));
  CHECK(schubert<true>(WeylType::D, 2, weyl_generator(WeylType::D, 2, 1)) ==
        sparse("x1 + x2", 2));
  CHECK(schubert<true>(WeylType::B, 2, weyl_longest(WeylType::B, 2)) == sparse("x1^3*x2", 2));
}

TEST_CASE("identity constants") {
  for (int n = 1; n <= 4; ++n) {
    Int c = constant_check<true>(WeylType::B, n);
    CHECK((c == 1 || c == -1));
  }
  for (int n = 2; n <= 4; ++n) {
    Int c = constant_check<true>(WeylType::D, n);
    CHECK((c == pow2(n - 1) || c == -pow2(n - 1)));
  }
  for (int n = 1; n <= 3; ++n)
    CHECK(SchubertFamily::get(WeylType::B, n)->constant() == constant_check<true>(WeylType::B, n));
  for (int n = 2; n <= 3; ++n)
    CHECK(SchubertFamily::get(WeylType::D, n)->constant() == constant_check<true>(WeylType::D, n));
}

TEST_CASE("degrees and diagonal constants") {
  for (WeylType t : {WeylType::B, WeylType::D}) {
    for (int n = (t == WeylType::D ? 2 : 1); n <= 3; ++n) {
      auto fam = SchubertFamilyT<true>::get(t, n);
      Int unit = t == WeylType::B ? Int(1) : pow2(n - 1);
      for (int i = 0; i < fam->group().size(); ++i) {
        CHECK(fam->poly(i).homogeneous_degree() == fam->group().length(i));
        CHECK(q_degree(fam->poly(i).terms().begin()->first) == 2 * fam->group().length(i));
        CHECK((fam->kappa(i) == unit || fam->kappa(i) == -unit));
      }
    }
  }
}

TEST_CASE("triangularity of the pairing") {
  for (WeylType t : {WeylType::B, WeylType::D}) {
    for (int n = (t == WeylType::D ? 2 : 1); n <= 3; ++n) {
      auto fam = SchubertFamilyT<true>::get(t, n);
      const auto& g = fam->group();
      for (int u = 0; u < g.size(); ++u) {
        for (int w = 0; w < g.size(); ++w) {
          if (g.length(w) > g.length(u)) continue;
          auto val = apply_word(Variant::spin, t, n, g.word(u), fam->poly(w));
          if (u == w) {
            CHECK(!val.is_zero());
          } else {
            CHECK(val.is_zero());
          }
        }
      }
    }
  }
}

static std::vector<Exponents> box_monomials(WeylType t, int n) {
  Exponents box = staircase(t, n);
  std::vector<Exponents> monos;
  Exponents cur(n, 0);
  while (true) {
    monos.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[i] == box[i]) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  return monos;
}

TEST_CASE("type B family against the staircase box") {
  // The box {r : r_i <= 2n-2i+1} has (2n)!! monomials whose degree counts
  // match the family's length counts, and for n = 1 the family is a
  // unimodular basis of the box lattice. For n >= 2 some members carry
  // monomials outside the box, so the two lattices differ; the escape is
  // pinned exactly below.
  for (int n = 1; n <= 3; ++n) {
    auto fam = SchubertFamily::get(WeylType::B, n);
    auto monos = box_monomials(WeylType::B, n);
    REQUIRE(static_cast<int>(monos.size()) == fam->group().size());

    std::map<int, int> box_by_degree;
    for (const auto& e : monos)
      ++box_by_degree[std::accumulate(e.begin(), e.end(), 0)];
    std::map<int, int> fam_by_degree;
    for (int i = 0; i < fam->group().size(); ++i)
      ++fam_by_degree[fam->group().length(i)];
    CHECK(box_by_degree == fam_by_degree);

    Exponents box = staircase(WeylType::B, n);
    int escapes = 0;
    for (int i = 0; i < fam->group().size(); ++i) {
      bool inside = true;
      for (const auto& [e, c] : fam->poly(i).terms())
        for (int j = 0; j < n; ++j)
          if (e[j] > box[j]) inside = false;
      if (!inside) ++escapes;
    }
    if (n == 1) CHECK(escapes == 0);
    if (n == 2) CHECK(escapes == 2);
    if (n == 3) CHECK(escapes == 33);

    std::map<Exponents, int> idx;
    for (int i = 0; i < fam->group().size(); ++i)
      for (const auto& [e, c] : fam->poly(i).terms())
        idx.emplace(e, static_cast<int>(idx.size()));
    RatMat rows;
    for (int i = 0; i < fam->group().size(); ++i) {
      RatVec v(idx.size(), Rat(0));
      for (const auto& [e, c] : fam->poly(i).terms()) v[idx.at(e)] = Rat(c);
      rows.push_back(std::move(v));
    }
    CHECK(rat_rank(std::move(rows)) == fam->group().size());
  }

  // n = 1 is an honest unimodular change of basis: {1, x1} against the box.
  {
    auto fam = SchubertFamily::get(WeylType::B, 1);
    auto monos = box_monomials(WeylType::B, 1);
    std::map<Exponents, int> idx;
    for (const auto& e : monos) idx.emplace(e, static_cast<int>(idx.size()));
    std::vector<std::vector<Int>> m(monos.size(), std::vector<Int>(monos.size(), Int(0)));
    for (int i = 0; i < fam->group().size(); ++i)
      for (const auto& [e, c] : fam->poly(i).terms()) {
        REQUIRE(idx.count(e));
        m[i][idx.at(e)] = c;
      }
    Int det = int_det(std::move(m));
    CHECK((det == 1 || det == -1));
  }

  // The exact escape witness in rank 2: the length-3 member at window
  // (-2,-1) is x1^2*x2 + x1*x2^2, and (1,2) exceeds the box bound (3,1).
  {
    SignedPerm w{WeylType::B, {-2, -1}};
    CHECK(schubert<true>(WeylType::B, 2, w) == sparse("x1^2*x2 + x1*x2^2", 2));
    auto deg2_family = RatMat{{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(1)}};
    auto deg2_box = RatMat{{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}};
    CHECK_FALSE(rat_spans_equal(deg2_family, deg2_box));
  }
}

TEST_CASE("type D family is linearly independent") {
  for (int n = 2; n <= 3; ++n) {
    auto fam = SchubertFamilyT<true>::get(WeylType::D, n);
    std::map<Exponents, int> idx;
    for (int i = 0; i < fam->group().size(); ++i)
      for (const auto& [e, c] : fam->poly(i).terms())
        idx.emplace(e, static_cast<int>(idx.size()));
    RatMat rows;
    for (int i = 0; i < fam->group().size(); ++i) {
      RatVec v(idx.size(), Rat(0));
      for (const auto& [e, c] : fam->poly(i).terms()) v[idx.at(e)] = Rat(c);
      rows.push_back(std::move(v));
    }
    CHECK(rat_rank(std::move(rows)) == fam->group().size());
  }
}

TEST_CASE("decomposition examples") {
  auto one_var = schubert_decompose(WeylType::B, 1, sparse("x1^2", 1));
  REQUIRE(one_var.size() == 1);
  CHECK(one_var.at(0) == sparse("x1^2", 1));
  CHECK(in_lambda(WeylType::B, 1, one_var.at(0)).member);

  auto fam = SchubertFamily::get(WeylType::B, 2);
  for (int i = 0; i < fam->group().size(); ++i) {
    auto coeffs = schubert_decompose(WeylType::B, 2, fam->poly(i));
    REQUIRE(coeffs.size() == 1);
    CHECK(coeffs.begin()->first == i);
    CHECK(coeffs.begin()->second == sparse("1", 2));
  }

  auto rational = schubert_decompose(WeylType::D, 2,
                                     parse_poly<Rat, true>("x1^2", 2));
  CHECK(schubert_expand(WeylType::D, 2, rational) == parse_poly<Rat, true>("x1^2", 2));
  for (const auto& [i, c] : rational) CHECK(in_lambda(WeylType::D, 2, c).member);
}

TEST_CASE("round trips on random polynomials") {
  std::mt19937 rng(5150);
  for (int n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 12; ++trial) {
      auto f = test::random_poly<Int, true>(rng, n, 6, 5);
      auto coeffs = schubert_decompose(WeylType::B, n, f);
      CHECK(schubert_expand(WeylType::B, n, coeffs) == f);
      for (const auto& [i, c] : coeffs) CHECK(in_lambda(WeylType::B, n, c).member);
    }
  }
  for (int n = 2; n <= 3; ++n) {
    for (int trial = 0; trial < 12; ++trial) {
      auto f = test::random_poly<Rat, true>(rng, n, 6, 5);
      auto coeffs = schubert_decompose(WeylType::D, n, f);
      CHECK(schubert_expand(WeylType::D, n, coeffs) == f);
      for (const auto& [i, c] : coeffs) CHECK(in_lambda(WeylType::D, n, c).member);
    }
  }
}

TEST_CASE("type D integer decomposition fails where division demands halves") {
  CHECK_THROWS_AS(schubert_decompose(WeylType::D, 2, sparse("1", 2)), DomainDivisionError);
  // over dyadic numbers the same decomposition goes through
  auto f = parse_poly<Dyadic, true>("1", 2);
  auto coeffs = schubert_decompose(WeylType::D, 2, f);
  CHECK(schubert_expand(WeylType::D, 2, coeffs) == f);
}

TEST_CASE("operators commute with symmetric right factors") {
  std::mt19937 rng(99);
  for (WeylType t : {WeylType::B, WeylType::D}) {
    int n = 3;
    std::vector<SkewPoly> gens;
    for (int k = 1; k <= n; ++k) gens.push_back(elementary<true>(t, n, k));
    for (int index = 1; index <= generator_count(t, n); ++index) {
      Demazure op(Variant::spin, t, n, index);
      for (int trial = 0; trial < 6; ++trial) {
        auto f = test::random_poly<Int, true>(rng, n, 4, 4);
        for (const auto& g : gens) CHECK(op(f * g) == op(f) * g);
      }
    }
  }
}

TEST_SUITE_END();
