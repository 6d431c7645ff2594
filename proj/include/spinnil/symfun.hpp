#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spinnil/demazure.hpp"
#include "spinnil/linalg.hpp"
#include "spinnil/qpi.hpp"
#include "spinnil/weyl.hpp"

namespace spinnil {

namespace detail {

// Sum over k-subsets of {lo..n} of the product of the chosen variables,
// each raised to `power`.
template <bool Skew>
BasicPoly<Int, Skew> subset_sum(int n, int k, int lo, int power) {
  using Poly = BasicPoly<Int, Skew>;
  Poly out = Poly::zero(n);
  if (k < 0 || k > n - lo + 1) return out;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = lo + i;
  while (true) {
    Exponents e(n, 0);
    for (int v : pick) e[v - 1] = power;
    out.add_term(e, Int(1));
    int i = k - 1;
    while (i >= 0 && pick[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

}  // namespace detail

/// Generator of the symmetric subring: squared elementary symmetric sums for
/// types B and D (with the top type D generator x_1..x_n), plain elementary
/// symmetric sums for the commutative type A ring.
template <bool Skew>
BasicPoly<Int, Skew> elementary(WeylType t, int n, int k) {
  check_rank(t, n);
  if (k < 1 || k > n) throw std::out_of_range("generator index out of range");
  if (t == WeylType::A) {
    if constexpr (Skew) throw std::invalid_argument("no skew type A generator set");
    return detail::subset_sum<Skew>(n, k, 1, 1);
  }
  if (t == WeylType::D && k == n) return detail::subset_sum<Skew>(n, n, 1, 1);
  return detail::subset_sum<Skew>(n, k, 1, 2);
}

/// q-degree of the k-th generator.
inline int elementary_degree(WeylType t, int n, int k) {
  if (t == WeylType::A) return 2 * k;
  if (t == WeylType::D && k == n) return 2 * n;
  return 4 * k;
}

struct InLambdaCertificate {
  bool member = false;
  std::vector<std::pair<std::string, bool>> per_op;  // ("d3", annihilated?)
};

/// Membership in the intersection of the kernels of all Demazure operators.
template <class S, bool Skew>
InLambdaCertificate in_lambda(WeylType t, int n, const BasicPoly<S, Skew>& f) {
  Variant v = Skew ? Variant::spin : Variant::even;
  InLambdaCertificate cert;
  cert.member = true;
  for (int i = 1; i <= generator_count(t, n); ++i) {
    bool zero = Demazure(v, t, n, i)(f).is_zero();
    cert.per_op.emplace_back("d" + std::to_string(i), zero);
    cert.member = cert.member && zero;
  }
  return cert;
}

/// Polynomial in the abstract generators e1..en with integer coefficients.
struct GenExpr {
  int rank = 0;
  std::map<Exponents, Int> terms;

  bool is_zero() const { return terms.empty(); }

  friend bool operator==(const GenExpr& a, const GenExpr& b) {
    return a.rank == b.rank && a.terms == b.terms;
  }
  friend bool operator!=(const GenExpr& a, const GenExpr& b) { return !(a == b); }

  void add_term(const Exponents& e, Int c) {
    if (c == 0) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
      terms.emplace(e, std::move(c));
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  std::string str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
      Int a = it->second;
      if (first) {
        if (a < 0) {
          os << "-";
          a = -a;
        }
      } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < it->first.size(); ++i) {
        if (it->first[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "e" + std::to_string(i + 1);
        if (it->first[i] > 1) mono += "^" + std::to_string(it->first[i]);
      }
      if (a != 1 || mono.empty()) os << a.str();
      if (a != 1 && !mono.empty()) os << "*";
      os << mono;
    }
    return os.str();
  }
};

/// Evaluate a generator expression as a concrete polynomial.
template <bool Skew>
BasicPoly<Int, Skew> expand_elementary(WeylType t, int n, const GenExpr& g) {
  using Poly = BasicPoly<Int, Skew>;
  Poly out = Poly::zero(n);
  for (const auto& [mu, c] : g.terms) {
    Poly prod = Poly::constant(n, c);
    for (int k = 1; k <= n; ++k)
      for (int rep = 0; rep < mu[k - 1]; ++rep) prod = prod * elementary<Skew>(t, n, k);
    out += prod;
  }
  return out;
}

namespace detail {

// Classical elimination against elementary symmetric polynomials of the
// (commutative) variables y_1..y_n; the lex-leading exponent of a symmetric
// polynomial is weakly decreasing, and subtracting c * prod e_k^{lam_k -
// lam_{k+1}} removes it.
inline GenExpr express_classical(int n, BasicPoly<Int, false> f) {
  GenExpr out;
  out.rank = n;
  while (!f.is_zero()) {
    const auto& [lam, c] = *f.terms().rbegin();
    Exponents mu(n, 0);
    for (int k = 0; k < n; ++k) {
      int next = k + 1 < n ? lam[k + 1] : 0;
      if (lam[k] < next) throw NotExpressibleError("polynomial is not symmetric");
      mu[k] = lam[k] - next;
    }
    BasicPoly<Int, false> prod = BasicPoly<Int, false>::constant(n, c);
    for (int k = 1; k <= n; ++k)
      for (int rep = 0; rep < mu[k - 1]; ++rep)
        prod = prod * subset_sum<false>(n, k, 1, 1);
    out.add_term(mu, c);
    f -= prod;
  }
  return out;
}

// Halve all exponents into a commutative polynomial in y_i = x_i^2.
template <bool Skew>
BasicPoly<Int, false> halve_exponents(const BasicPoly<Int, Skew>& f) {
  BasicPoly<Int, false> out = BasicPoly<Int, false>::zero(f.rank());
  for (const auto& [e, c] : f.terms()) {
    Exponents h = e;
    for (int& v : h) {
      if (v % 2 != 0) throw NotExpressibleError("odd exponent outside the top-generator part");
      v /= 2;
    }
    out.add_term(h, c);
  }
  return out;
}

}  // namespace detail

/// Express a symmetric-subring element as a polynomial in the generators.
/// Type B inputs must have even exponents throughout; type D inputs split
/// into an all-even part and an all-odd part left-divisible by x_1..x_n.
template <bool Skew>
GenExpr express_in_elementary(WeylType t, int n, const BasicPoly<Int, Skew>& f) {
  check_rank(t, n);
  if (t == WeylType::A) {
    if constexpr (Skew) {
      throw std::invalid_argument("no skew type A generator set");
    } else {
      GenExpr g = detail::express_classical(n, f);
      g.rank = n;
      return g;
    }
  }
  using Poly = BasicPoly<Int, Skew>;
  Poly even_part = Poly::zero(n);
  Poly odd_part = Poly::zero(n);
  for (const auto& [e, c] : f.terms()) {
    int odd_vars = 0;
    for (int v : e) odd_vars += v % 2;
    if (odd_vars == 0) {
      even_part.add_term(e, c);
    } else if (odd_vars == n && t == WeylType::D) {
      odd_part.add_term(e, c);
    } else {
      throw NotExpressibleError("mixed exponent parities");
    }
  }
  // even part: eliminate in y_i = x_i^2, then rewrite the top generator of
  // type D via e_n^b = sign * (e_n^d)^2.
  GenExpr expr = detail::express_classical(n, detail::halve_exponents(even_part));
  expr.rank = n;
  if (t == WeylType::D) {
    GenExpr rewritten;
    rewritten.rank = n;
    // e_n^b = csign * (e_n^d)^2; the sign is the skew reorder cost of
    // squaring x_1..x_n, trivial in the commutative variant.
    int csign = !Skew || (n * (n - 1) / 2) % 2 == 0 ? 1 : -1;
    for (const auto& [mu, c] : expr.terms) {
      Exponents nu = mu;
      int m = nu[n - 1];
      nu[n - 1] = 2 * m;
      Int coeff = c;
      if (m % 2 == 1 && csign < 0) coeff = -coeff;
      rewritten.add_term(nu, coeff);
    }
    expr = std::move(rewritten);
    if (!odd_part.is_zero()) {
      // strip one x_1..x_n factor on the left, tracking skew reorder signs
      Poly h = Poly::zero(n);
      Exponents ones(n, 1);
      for (const auto& [e, c] : odd_part.terms()) {
        Exponents rest = e;
        for (int& v : rest) --v;
        int sign = 1;
        if constexpr (Skew) sign = mono_mul(ones, rest).sign;
        h.add_term(rest, sign > 0 ? c : -c);
      }
      GenExpr odd_expr = express_in_elementary<Skew>(t, n, h);
      for (const auto& [mu, c] : odd_expr.terms) {
        Exponents nu = mu;
        ++nu[n - 1];
        expr.add_term(nu, c);
      }
    }
  } else if (!odd_part.is_zero()) {
    throw NotExpressibleError("odd exponents in a type B element");
  }
  return expr;
}

/// Graded rank of the symmetric subring: the generating series of the free
/// generator-monomial basis, as a plain q-series.
inline QPiSeries hilbert_series(Variant v, WeylType t, int n, int truncation) {
  check_rank(t, n);
  if (v == Variant::spin && t == WeylType::A)
    throw std::invalid_argument("no skew type A generator set");
  QPiSeries s = QPiSeries::one();
  for (int k = 1; k <= n; ++k) {
    int d = elementary_degree(t, n, k);
    QPiSeries geo;
    for (int j = 0; j * d <= truncation; ++j) geo.add_term(j * d, 0, Int(1));
    s = (s * geo).truncated(truncation);
  }
  return s;
}

/// Closed form of the same series, expanded from the Laurent expression
/// q^{-l(w0)} (1-q^2)^{-n} / P(q) with P the Poincare polynomial factor.
inline QPiSeries lambda_closed_rank(WeylType t, int n, int truncation) {
  check_rank(t, n);
  if (t == WeylType::A) throw std::invalid_argument("closed form modeled for types B and D");
  QPiSeries one_minus_q2 = QPiSeries::one() - QPiSeries::monomial(2, 0, Int(1));
  int l0;
  QPiSeries poincare;
  if (t == WeylType::B) {
    l0 = n * n;
    poincare = qpi_double_factorial(2 * n, false);
  } else {
    l0 = n * (n - 1);
    poincare = qpi_integer(n, false) * qpi_double_factorial(2 * n - 2, false);
  }
  QPiSeries den = one_minus_q2.pow(n) * poincare;
  return QPiSeries::divide(QPiSeries::monomial(-l0, 0, Int(1)), den, truncation);
}

struct KkCheck {
  int k = 0;
  bool pass = false;
};

/// Identity relating the type B generators in x_2..x_n to those in x_1..x_n:
/// e'_k = sum_{j=0}^{k} (-1)^j x_1^{2j} e_{k-j}.
inline std::vector<KkCheck> kk_identity_check(int n) {
  if (n < 2) throw std::invalid_argument("needs at least two variables");
  std::vector<KkCheck> out;
  for (int k = 0; k <= n; ++k) {
    SkewPoly lhs = detail::subset_sum<true>(n, k, 2, 2);
    SkewPoly rhs = SkewPoly::zero(n);
    for (int j = 0; j <= k; ++j) {
      Exponents e(n, 0);
      e[0] = 2 * j;
      SkewPoly term = SkewPoly::monomial(n, e, Int(j % 2 == 0 ? 1 : -1));
      rhs += term * detail::subset_sum<true>(n, k - j, 1, 2);
    }
    out.push_back({k, lhs == rhs});
  }
  return out;
}

/// Degree-by-degree comparison of the kernel of all even Demazure operators
/// with the span of full group symmetrizations of monomials.
inline bool even_invariants_match_kernel(WeylType t, int n, int degree) {
  if (degree == 0) return true;
  auto group = WeylGroup::get(t, n);
  auto monos = monomials_of_degree(n, degree);
  std::map<Exponents, int> idx;
  for (const auto& e : monos) idx.emplace(e, static_cast<int>(idx.size()));
  RatMat symmetrized;
  for (const auto& e : monos) {
    EvenPoly sum = EvenPoly::zero(n);
    for (int i = 0; i < group->size(); ++i)
      sum += apply_point_word(Variant::even, t, n, group->word(i),
                              EvenPoly::monomial(n, e, Int(1)));
    RatVec v(monos.size(), Rat(0));
    for (const auto& [m, c] : sum.terms()) v[idx.at(m)] = Rat(c);
    symmetrized.push_back(std::move(v));
  }
  if (generator_count(t, n) == 0) return true;  // rank 1 type A: no constraints
  auto lower = monomials_of_degree(n, degree - 1);
  std::map<Exponents, int> lidx;
  for (const auto& e : lower) lidx.emplace(e, static_cast<int>(lidx.size()));
  RatMat stack;
  for (int i = 1; i <= generator_count(t, n); ++i) {
    Demazure op(Variant::even, t, n, i);
    RatMat m(lower.size(), RatVec(monos.size(), Rat(0)));
    for (std::size_t j = 0; j < monos.size(); ++j) {
      auto img = op(EvenPoly::monomial(n, monos[j], Int(1)));
      for (const auto& [e, c] : img.terms()) m[lidx.at(e)][j] = Rat(c);
    }
    stack.insert(stack.end(), m.begin(), m.end());
  }
  return rat_spans_equal(rat_kernel(std::move(stack)), symmetrized);
}

}  // namespace spinnil
