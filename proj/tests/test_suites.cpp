#include "doctest.h"

#include "spinnil/criteria.hpp"

using namespace spinnil;

TEST_SUITE("suites") {
  TEST_CASE("bounded randomness is deterministic and in range") {
    std::mt19937 a(9), b(9);
    for (int i = 0; i < 200; ++i) {
      int va = rand_range(a, -3, 5);
      CHECK(va == rand_range(b, -3, 5));
      CHECK(va >= -3);
      CHECK(va <= 5);
    }
  }

  TEST_CASE("random polynomials respect their bounds") {
    std::mt19937 rng(17);
    for (int i = 0; i < 50; ++i) {
      auto f = random_poly<Int, true>(3, 6, rng);
      CHECK(!f.is_zero());
      CHECK(f.terms().size() <= 4);
      for (const auto& [e, c] : f.terms()) {
        int d = 0;
        for (int v : e) d += v;
        CHECK(d <= 6);
        CHECK(c != 0);
      }
    }
    std::mt19937 r1(5), r2(5);
    CHECK(random_poly<Rat, true>(2, 8, r1) == random_poly<Rat, true>(2, 8, r2));
  }

  TEST_CASE("runners give the expected verdicts on small instances") {
    CHECK(check_relations(Variant::spin, WeylType::D, 2, 4).pass);
    CHECK(check_schubert_constant(WeylType::B, 3).pass);
    CHECK(check_box_basis(1).pass);
    CHECK(check_family_independence(WeylType::D, 2).pass);
    CHECK(check_pbw_rank(WeylType::B, 1, 8).pass);
    CHECK(check_lambda_kernel(WeylType::D, 3).pass);
    CHECK(check_hilbert(WeylType::B, 2, 24).pass);
    CHECK(check_kk(3).pass);
    CHECK(check_free_module<Int>(WeylType::B, 2, 10, 6, 31).pass);
    CHECK(check_matrix_homomorphism<Int>(WeylType::B, 1, 5, 32).pass);
    auto units = check_matrix_units<Int, true>(WeylType::B, 1);
    CHECK(units.pass);
    CHECK(units.details == "4 of 4 units solved");
    CHECK(check_rank_series(Variant::even, WeylType::D, 2, 12).pass);
    CHECK(check_center(WeylType::B, 2, 4).pass);
    CHECK(check_even_invariants(WeylType::A, 2, 5).pass);
    CHECK(check_kernel_correspondence(1, 8).pass);
    CHECK(check_kernel_correspondence(2, 6).pass);
  }

  TEST_CASE("the two structural failures surface honestly") {
    auto box = check_box_basis(2);
    CHECK(!box.pass);
    CHECK(box.details.find("2 members with support outside the box") != std::string::npos);
    CHECK(box.details.find("rank 8 over Q") != std::string::npos);

    auto center = check_center(WeylType::D, 2, 4);
    CHECK(!center.pass);
    CHECK(center.details.find("commuting direction ok") != std::string::npos);
    CHECK(center.details.find("commutant dimension 2, expected 1") != std::string::npos);

    auto quick = run_quick_profile(1);
    std::vector<std::string> failing;
    for (const auto& c : quick)
      if (!c.pass) failing.push_back(c.id + " " + c.params);
    REQUIRE(failing.size() == 2);
    CHECK(failing[0] == "schubert/box-basis type=b n=2");
    CHECK(failing[1] == "center/two-sided type=d n=2 degree<=6");
  }

  TEST_CASE("matrix coordinates separate the operator basis") {
    for (auto [t, n] : std::vector<std::pair<WeylType, int>>{
             {WeylType::B, 1}, {WeylType::B, 2}, {WeylType::D, 2}}) {
      for (int d = -8; d <= 8; d += 2) {
        auto keys = pbw_basis_of_degree(t, n, d);
        if (keys.empty()) continue;
        std::map<std::tuple<int, int, Exponents>, int> coord_idx;
        std::vector<std::map<std::tuple<int, int, Exponents>, Rat>> rows;
        for (const auto& key : keys) {
          NilHeckeElement<Rat, true> e(t, n);
          e.add_term(key.w, key.r, Rat(1));
          auto m = to_matrix(e);
          std::map<std::tuple<int, int, Exponents>, Rat> row;
          for (std::size_t v = 0; v < m.entries.size(); ++v)
            for (std::size_t w = 0; w < m.entries[v].size(); ++w)
              for (const auto& [mono, c] : m.entries[v][w].terms()) {
                auto k = std::make_tuple(static_cast<int>(v), static_cast<int>(w), mono);
                row[k] = c;
                coord_idx.emplace(k, 0);
              }
          rows.push_back(std::move(row));
        }
        int next = 0;
        for (auto& kv : coord_idx) kv.second = next++;
        RatMat dense;
        for (const auto& row : rows) {
          RatVec r(coord_idx.size(), Rat(0));
          for (const auto& [k, c] : row) r[coord_idx.at(k)] = c;
          dense.push_back(std::move(r));
        }
        CHECK(rat_rank(dense) == static_cast<int>(keys.size()));
      }
    }
  }
}
