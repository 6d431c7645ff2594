#pragma once

// Independent brute-force oracles used to validate the library's derived
// formulas: letter-shuffle signs, breadth-first word search, random inputs.

#include <map>
#include <random>
#include <vector>

#include "spinnil/skewpoly.hpp"
#include "spinnil/weyl.hpp"

namespace spinnil::test {

inline std::vector<int> monomial_letters(const Exponents& e) {
  std::vector<int> w;
  for (int i = 0; i < static_cast<int>(e.size()); ++i)
    for (int k = 0; k < e[i]; ++k) w.push_back(i);
  return w;
}

/// Sign of merging x^a x^b into canonical order, counting bubble swaps of
/// distinct letters (equal letters never swap).
inline int shuffle_sign(const Exponents& a, const Exponents& b) {
  auto w = monomial_letters(a);
  auto v = monomial_letters(b);
  w.insert(w.end(), v.begin(), v.end());
  long swaps = 0;
  for (std::size_t pass = 0; pass + 1 < w.size(); ++pass)
    for (std::size_t j = 0; j + 1 < w.size() - pass; ++j)
      if (w[j] > w[j + 1]) {
        std::swap(w[j], w[j + 1]);
        ++swaps;
      }
  return swaps % 2 == 0 ? 1 : -1;
}

/// Shortest word lengths for every group element via breadth-first search
/// over right multiplication by generators.
inline std::map<std::vector<int>, int> bfs_lengths(WeylType t, int n) {
  std::vector<SignedPerm> gens;
  for (int s = 1; s <= generator_count(t, n); ++s) gens.push_back(weyl_generator(t, n, s));
  std::map<std::vector<int>, int> dist;
  std::vector<SignedPerm> queue{weyl_identity(t, n)};
  dist[queue[0].window] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    SignedPerm cur = queue[head];
    int d = dist[cur.window];
    for (const auto& g : gens) {
      SignedPerm next = weyl_compose(cur, g);
      if (!dist.count(next.window)) {
        dist[next.window] = d + 1;
        queue.push_back(next);
      }
    }
  }
  return dist;
}

template <class S = Int, bool Skew = true>
BasicPoly<S, Skew> random_poly(std::mt19937& rng, int rank, int max_degree, int term_count) {
  auto monos = monomials_up_to_degree(rank, max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::uniform_int_distribution<int> coeff(-4, 4);
  auto out = BasicPoly<S, Skew>::zero(rank);
  for (int i = 0; i < term_count; ++i)
    out.add_term(monos[pick(rng)], scalar_from_int<S>(Int(coeff(rng))));
  return out;
}

template <class S = Int, bool Skew = true>
BasicPoly<S, Skew> random_homogeneous(std::mt19937& rng, int rank, int degree, int term_count) {
  auto monos = monomials_of_degree(rank, degree);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::uniform_int_distribution<int> coeff(-4, 4);
  auto out = BasicPoly<S, Skew>::zero(rank);
  for (int i = 0; i < term_count; ++i)
    out.add_term(monos[pick(rng)], scalar_from_int<S>(Int(coeff(rng))));
  return out;
}

}  // namespace spinnil::test
