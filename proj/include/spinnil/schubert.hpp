#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "spinnil/demazure.hpp"
#include "spinnil/symfun.hpp"
#include "spinnil/weyl.hpp"

namespace spinnil {

/// Staircase exponent: (2n-1, 2n-3, .., 1) for B, (2n-2, .., 2, 0) for D,
/// (n-1, .., 1, 0) for A.
inline Exponents staircase(WeylType t, int n) {
  check_rank(t, n);
  Exponents d(n);
  for (int i = 0; i < n; ++i) {
    switch (t) {
      case WeylType::A: d[i] = n - 1 - i; break;
      case WeylType::B: d[i] = 2 * (n - i) - 1; break;
      case WeylType::D: d[i] = 2 * (n - 1 - i); break;
    }
  }
  return d;
}

/// The whole family of Schubert polynomials of one group, indexed by the
/// canonical element order, with the measured diagonal constants
/// kappa_w = d_w(s_w).
template <bool Skew>
class SchubertFamilyT {
 public:
  using Poly = BasicPoly<Int, Skew>;

  static std::shared_ptr<const SchubertFamilyT> get(WeylType t, int n) {
    static std::mutex mu;
    static std::map<std::pair<WeylType, int>, std::shared_ptr<const SchubertFamilyT>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{t, n}];
    if (!slot) slot = std::shared_ptr<const SchubertFamilyT>(new SchubertFamilyT(t, n));
    return slot;
  }

  WeylType type() const { return type_; }
  int rank() const { return rank_; }
  const WeylGroup& group() const { return *group_; }
  const Poly& poly(int idx) const { return polys_[idx]; }
  const Int& kappa(int idx) const { return kappas_[idx]; }
  /// Value of the identity element's polynomial (a signed constant).
  Int constant() const {
    const Poly& p = polys_[0];
    if (p.is_zero()) return Int(0);
    return p.terms().begin()->second;
  }

 private:
  SchubertFamilyT(WeylType t, int n) : type_(t), rank_(n), group_(WeylGroup::get(t, n)) {
    constexpr Variant v = Skew ? Variant::spin : Variant::even;
    Poly top = Poly::monomial(n, staircase(t, n), Int(1));
    SignedPerm w0 = weyl_longest(t, n);
    polys_.reserve(group_->size());
    kappas_.reserve(group_->size());
    for (int i = 0; i < group_->size(); ++i) {
      SignedPerm u = weyl_compose(weyl_inverse(group_->element(i)), w0);
      Poly s = apply_word(v, t, n, canonical_word(u), top);
      auto deg = s.homogeneous_degree();  // x-degree; the q-degree is twice it
      if (!deg || *deg != group_->length(i))
        throw SpinnilError("family member has the wrong degree");
      Poly diag = apply_word(v, t, n, group_->word(i), s);
      if (diag.degree() > 0) throw SpinnilError("diagonal value is not constant");
      kappas_.push_back(diag.is_zero() ? Int(0) : diag.terms().begin()->second);
      if (kappas_.back() == 0) throw SpinnilError("vanishing diagonal value");
      polys_.push_back(std::move(s));
    }
  }

  WeylType type_;
  int rank_;
  std::shared_ptr<const WeylGroup> group_;
  std::vector<Poly> polys_;
  std::vector<Int> kappas_;
};

using SchubertFamily = SchubertFamilyT<true>;

/// Single Schubert polynomial d_{w^{-1} w0}(x^delta).
template <bool Skew>
BasicPoly<Int, Skew> schubert(WeylType t, int n, const SignedPerm& w) {
  auto fam = SchubertFamilyT<Skew>::get(t, n);
  return fam->poly(fam->group().index_of(w));
}

/// d_{w0}(x^delta), computed directly; +-1 for type B, +-2^{n-1} for type D.
template <bool Skew = true>
Int constant_check(WeylType t, int n) {
  constexpr Variant v = Skew ? Variant::spin : Variant::even;
  auto top = BasicPoly<Int, Skew>::monomial(n, staircase(t, n), Int(1));
  auto c = apply_word(v, t, n, longest_word(t, n), top);
  if (c.degree() > 0) throw SpinnilError("longest-word image is not constant");
  return c.is_zero() ? Int(0) : c.terms().begin()->second;
}

/// Decomposition f = sum_w s_w c_w with symmetric right coefficients,
/// peeling by strictly decreasing length.
template <class S, bool Skew>
std::map<int, BasicPoly<S, Skew>> schubert_decompose(WeylType t, int n, BasicPoly<S, Skew> f) {
  constexpr Variant v = Skew ? Variant::spin : Variant::even;
  auto fam = SchubertFamilyT<Skew>::get(t, n);
  const WeylGroup& g = fam->group();
  std::map<int, BasicPoly<S, Skew>> out;
  int idx = g.size() - 1;
  for (int len = g.longest_length(); len >= 0 && !f.is_zero(); --len) {
    std::vector<std::pair<int, BasicPoly<S, Skew>>> level;
    for (int i = idx; i >= 0 && g.length(i) == len; --i) {
      auto proj = apply_word(v, t, n, g.word(i), f);
      if (proj.is_zero()) continue;
      BasicPoly<S, Skew> c = BasicPoly<S, Skew>::zero(n);
      if (!proj.try_divide_scalar(scalar_from_int<S>(fam->kappa(i)), &c))
        throw DomainDivisionError("domain cannot divide");
      level.emplace_back(i, std::move(c));
    }
    while (idx >= 0 && g.length(idx) == len) --idx;
    for (auto& [i, c] : level) {
      f -= fam->poly(i).template converted<S>() * c;
      out.emplace(i, std::move(c));
    }
  }
  if (!f.is_zero()) throw ResidualError("residual nonzero");
  return out;
}

/// Re-expansion of a decomposition (right coefficients).
template <class S, bool Skew>
BasicPoly<S, Skew> schubert_expand(WeylType t, int n,
                                   const std::map<int, BasicPoly<S, Skew>>& coeffs) {
  auto fam = SchubertFamilyT<Skew>::get(t, n);
  BasicPoly<S, Skew> out = BasicPoly<S, Skew>::zero(n);
  for (const auto& [i, c] : coeffs) out += fam->poly(i).template converted<S>() * c;
  return out;
}

}  // namespace spinnil
