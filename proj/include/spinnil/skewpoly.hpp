#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "spinnil/common.hpp"
#include "spinnil/scalars.hpp"

namespace spinnil {

/// Exponent vector of a canonical monomial x_1^{r_1} ... x_n^{r_n}.
/// Length is always the ambient rank; entries are >= 0.
using Exponents = std::vector<int>;

/// Exponent vector of the single variable x_i (1-based).
inline Exponents unit_exponent(int rank, int i) {
  Exponents e(rank, 0);
  e[i - 1] = 1;
  return e;
}

inline int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }
inline int exp_parity(const Exponents& e) { return total_degree(e) & 1; }
inline int q_degree(const Exponents& e) { return 2 * total_degree(e); }

/// Sign picked up when x^a * x^b is rewritten into canonical order: each
/// letter of b with variable index i crosses every letter of a with a larger
/// index, and distinct variables anticommute.
inline int skew_merge_sign(const Exponents& a, const Exponents& b) {
  int n = static_cast<int>(a.size());
  long long swaps = 0;
  int suffix = 0;  // sum of a_j for j > i
  for (int i = n - 1; i >= 0; --i) {
    swaps += static_cast<long long>(b[i]) * suffix;
    suffix += a[i];
  }
  return (swaps & 1) ? -1 : 1;
}

struct MonoProd {
  int sign;
  Exponents exp;
};

/// Skew product of canonical monomials.
inline MonoProd mono_mul(const Exponents& a, const Exponents& b) {
  MonoProd out{skew_merge_sign(a, b), a};
  for (std::size_t i = 0; i < a.size(); ++i) out.exp[i] += b[i];
  return out;
}

/// Sparse polynomial over scalar S; Skew=true gives the skew ring
/// (x_i x_j = -x_j x_i for i != j), Skew=false the commutative ring.
/// Terms are kept in a map ordered lexicographically on exponents, so
/// iteration order (and any serialization) is deterministic.
template <class S, bool Skew>
class BasicPoly {
 public:
  using Terms = std::map<Exponents, S>;

  explicit BasicPoly(int rank) : rank_(rank) {}

  static BasicPoly zero(int rank) { return BasicPoly(rank); }
  static BasicPoly constant(int rank, S c) {
    BasicPoly p(rank);
    p.add_term(Exponents(rank, 0), std::move(c));
    return p;
  }
  static BasicPoly variable(int rank, int i) {
    if (i < 1 || i > rank) throw std::out_of_range("variable index out of range");
    Exponents e(rank, 0);
    e[i - 1] = 1;
    return monomial(rank, e, S(1));
  }
  static BasicPoly monomial(int rank, Exponents e, S c) {
    BasicPoly p(rank);
    p.add_term(std::move(e), std::move(c));
    return p;
  }

  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(Exponents e, S c) {
    if (scalar_is_zero(c)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(std::move(e), std::move(c));
    } else {
      it->second += c;
      if (scalar_is_zero(it->second)) terms_.erase(it);
    }
  }

  S coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? S(0) : it->second;
  }

  BasicPoly& operator+=(const BasicPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  BasicPoly& operator-=(const BasicPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, S(0) - c);
    return *this;
  }
  friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
  friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }
  friend BasicPoly operator-(const BasicPoly& a) {
    BasicPoly out(a.rank_);
    for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, S(0) - c);
    return out;
  }

  BasicPoly& operator*=(const S& c) {
    if (scalar_is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second *= c;
      it = scalar_is_zero(it->second) ? terms_.erase(it) : std::next(it);
    }
    return *this;
  }
  friend BasicPoly operator*(BasicPoly a, const S& c) { return a *= c; }
  friend BasicPoly operator*(const S& c, BasicPoly a) { return a *= c; }

  friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
    if (a.rank_ != b.rank_) throw std::invalid_argument("rank mismatch in product");
    BasicPoly out(a.rank_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e = ea;
        for (int i = 0; i < a.rank_; ++i) e[i] += eb[i];
        S c = ca * cb;
        if constexpr (Skew) {
          if (skew_merge_sign(ea, eb) < 0) c = S(0) - c;
        }
        out.add_term(std::move(e), std::move(c));
      }
    }
    return out;
  }
  BasicPoly& operator*=(const BasicPoly& o) { return *this = *this * o; }

  /// Left multiplication by the monomial x^e (order matters in the skew ring).
  BasicPoly premul_monomial(const Exponents& e) const {
    BasicPoly out(rank_);
    for (const auto& [m, c] : terms_) {
      Exponents sum = e;
      for (int i = 0; i < rank_; ++i) sum[i] += m[i];
      S cc = c;
      if constexpr (Skew) {
        if (skew_merge_sign(e, m) < 0) cc = S(0) - cc;
      }
      out.add_term(std::move(sum), std::move(cc));
    }
    return out;
  }
  BasicPoly premul_variable(int i) const {
    Exponents e(rank_, 0);
    e[i - 1] = 1;
    return premul_monomial(e);
  }

  friend bool operator==(const BasicPoly& a, const BasicPoly& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const BasicPoly& a, const BasicPoly& b) { return !(a == b); }

  /// Max total degree, or -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }

  /// Total degree if all terms share one, otherwise nullopt.
  std::optional<int> homogeneous_degree() const {
    std::optional<int> d;
    for (const auto& [e, c] : terms_) {
      int t = total_degree(e);
      if (!d) d = t;
      else if (*d != t) return std::nullopt;
    }
    return d;
  }

  BasicPoly component(int total_deg) const {
    BasicPoly out(rank_);
    for (const auto& [e, c] : terms_)
      if (total_degree(e) == total_deg) out.terms_.emplace(e, c);
    return out;
  }

  template <class T>
  BasicPoly<T, Skew> converted() const {
    BasicPoly<T, Skew> out(rank_);
    for (const auto& [e, c] : terms_) out.add_term(e, T(c));
    return out;
  }

  /// Componentwise exact division by a scalar; false if any coefficient
  /// fails to divide in S.
  bool try_divide_scalar(const S& c, BasicPoly* out) const {
    BasicPoly q(rank_);
    for (const auto& [e, v] : terms_) {
      S d(0);
      if (!try_divide(v, c, &d)) return false;
      q.terms_.emplace(e, std::move(d));
    }
    *out = std::move(q);
    return true;
  }

 private:
  int rank_;
  Terms terms_;
};

template <class S>
using SkewPolyOf = BasicPoly<S, true>;
template <class S>
using EvenPolyOf = BasicPoly<S, false>;
using SkewPoly = SkewPolyOf<Int>;
using EvenPoly = EvenPolyOf<Int>;

/// Image of one variable under a generator action: x_j -> sign * x_var.
struct VarImage {
  int var;
  int sign;
};

/// Point action of a simple generator on the polynomial ring.  The spin
/// actions (on the skew ring) carry the extra global signs of the spin
/// representation; the even actions are the classical geometric ones.
class PointAction {
 public:
  PointAction(Variant variant, WeylType type, int rank, int index)
      : variant_(variant), type_(type), rank_(rank), index_(index) {
    check_rank(type, rank);
    int ngen = generator_count(type, rank);
    if (index < 1 || index > ngen) throw std::out_of_range("generator index out of range");
  }

  Variant variant() const { return variant_; }
  WeylType type() const { return type_; }
  int rank() const { return rank_; }
  int index() const { return index_; }

  /// True for the B/D generator at index n, false for the A-type swaps.
  bool special() const { return type_ != WeylType::A && index_ == rank_; }

  VarImage image(int j) const {
    if (j < 1 || j > rank_) throw std::out_of_range("variable index out of range");
    const int n = rank_;
    if (variant_ == Variant::spin) {
      if (!special()) {
        if (j == index_) return {index_ + 1, -1};
        if (j == index_ + 1) return {index_, -1};
        return {j, -1};
      }
      if (type_ == WeylType::B) return {j, -1};
      // type D special generator
      if (j == n) return {n - 1, 1};
      if (j == n - 1) return {n, 1};
      return {j, -1};
    }
    // even
    if (!special()) {
      if (j == index_) return {index_ + 1, 1};
      if (j == index_ + 1) return {index_, 1};
      return {j, 1};
    }
    if (type_ == WeylType::B) return j == n ? VarImage{n, -1} : VarImage{j, 1};
    if (j == n) return {n - 1, -1};
    if (j == n - 1) return {n, -1};
    return {j, 1};
  }

  template <class S, bool Skew>
  BasicPoly<S, Skew> operator()(const BasicPoly<S, Skew>& f) const {
    if (f.rank() != rank_) throw std::invalid_argument("rank mismatch in point action");
    BasicPoly<S, Skew> out(rank_);
    for (const auto& [e, c] : f.terms()) {
      Exponents img(rank_, 0);
      std::vector<int> target(rank_);
      long long neg = 0;
      for (int i = 1; i <= rank_; ++i) {
        VarImage v = image(i);
        img[v.var - 1] = e[i - 1];
        target[i - 1] = v.var;
        if (v.sign < 0) neg += e[i - 1];
      }
      if constexpr (Skew) {
        // reordering the image blocks back into canonical order
        for (int i = 0; i < rank_; ++i)
          for (int j = i + 1; j < rank_; ++j)
            if (target[i] > target[j]) neg += static_cast<long long>(e[i]) * e[j];
      }
      S cc = c;
      if (neg & 1) cc = S(0) - cc;
      out.add_term(std::move(img), std::move(cc));
    }
    return out;
  }

 private:
  Variant variant_;
  WeylType type_;
  int rank_;
  int index_;
};

/// All monomials of the given total degree, in lexicographic order.
inline std::vector<Exponents> monomials_of_degree(int rank, int degree) {
  std::vector<Exponents> out;
  Exponents cur(rank, 0);
  // lexicographic enumeration by recursion on the first position
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == rank - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  if (rank == 0) return out;
  rec(0, degree);
  return out;
}

inline std::vector<Exponents> monomials_up_to_degree(int rank, int degree) {
  std::vector<Exponents> out;
  for (int d = 0; d <= degree; ++d) {
    auto part = monomials_of_degree(rank, d);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace spinnil
