#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "spinnil/io.hpp"
#include "spinnil/linalg.hpp"
#include "spinnil/parallel.hpp"
#include "spinnil/qpi.hpp"
#include "spinnil/schubert.hpp"
#include "spinnil/symfun.hpp"

namespace spinnil {

/// PBW term index: group element (by canonical enumeration order) and the
/// exponent vector of the monomial prefix in x^r d_w.
struct PbwKey {
  int w;
  Exponents r;
  auto operator<=>(const PbwKey&) const = default;
};

inline int pbw_q_degree(const WeylGroup& g, const PbwKey& k) {
  return 2 * total_degree(k.r) - 2 * g.length(k.w);
}

inline int pbw_parity(const WeylGroup& g, const PbwKey& k) {
  return (total_degree(k.r) + g.length(k.w)) & 1;
}

/// Cached table of values d_w(s_u) for one group; the backbone of every
/// triangular extraction below.  Entry [w][u] vanishes when l(u) < l(w),
/// and equals the constant kappa_w at u = w.
template <bool Skew>
class SchubertValueTable {
 public:
  static std::shared_ptr<const SchubertValueTable> get(WeylType t, int n) {
    static std::mutex mu;
    static std::map<std::pair<WeylType, int>, std::shared_ptr<const SchubertValueTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{t, n}];
    if (!slot) slot = std::shared_ptr<const SchubertValueTable>(new SchubertValueTable(t, n));
    return slot;
  }

  const BasicPoly<Int, Skew>& value(int w, int u) const { return vals_[w][u]; }
  const SchubertFamilyT<Skew>& family() const { return *family_; }

 private:
  SchubertValueTable(WeylType t, int n) : family_(SchubertFamilyT<Skew>::get(t, n)) {
    constexpr Variant v = Skew ? Variant::spin : Variant::even;
    const WeylGroup& g = family_->group();
    int size = g.size();
    vals_.assign(size, {});
    parallel_for(static_cast<std::size_t>(size), [&](std::size_t w) {
      std::vector<BasicPoly<Int, Skew>> row;
      row.reserve(size);
      for (int u = 0; u < size; ++u)
        row.push_back(apply_word(v, t, n, g.word(static_cast<int>(w)), family_->poly(u)));
      vals_[w] = std::move(row);
    });
  }

  std::shared_ptr<const SchubertFamilyT<Skew>> family_;
  std::vector<std::vector<BasicPoly<Int, Skew>>> vals_;
};

/// Element of the nilHecke algebra in PBW normal form: a finite sum of
/// terms c x^r d_w.  Homogeneous terms have q-degree 2|r| - 2 l(w) and
/// parity (|r| + l(w)) mod 2.
template <class S, bool Skew>
class NilHeckeElement {
 public:
  using Poly = BasicPoly<S, Skew>;
  using Terms = std::map<PbwKey, S>;

  NilHeckeElement(WeylType t, int n)
      : type_(t), rank_(n), group_(WeylGroup::get(t, n)) {
    check_rank(t, n);
  }

  static NilHeckeElement zero(WeylType t, int n) { return NilHeckeElement(t, n); }

  static NilHeckeElement unit(WeylType t, int n) {
    NilHeckeElement e(t, n);
    e.add_term(0, Exponents(n, 0), S(1));
    return e;
  }

  static NilHeckeElement variable(WeylType t, int n, int i) {
    if (i < 1 || i > n) throw std::out_of_range("variable index out of range");
    NilHeckeElement e(t, n);
    e.add_term(0, unit_exponent(n, i), S(1));
    return e;
  }

  static NilHeckeElement demazure(WeylType t, int n, int i) {
    NilHeckeElement e(t, n);
    int w = e.group_->index_of(weyl_generator(t, n, i));
    e.add_term(w, Exponents(n, 0), S(1));
    return e;
  }

  WeylType type() const { return type_; }
  int rank() const { return rank_; }
  const WeylGroup& group() const { return *group_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(int w, Exponents r, S c) {
    if (w < 0 || w >= group_->size()) throw std::out_of_range("group index out of range");
    if (static_cast<int>(r.size()) != rank_) throw std::invalid_argument("exponent rank mismatch");
    if (scalar_is_zero(c)) return;
    PbwKey key{w, std::move(r)};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), std::move(c));
    } else {
      it->second = it->second + c;
      if (scalar_is_zero(it->second)) terms_.erase(it);
    }
  }

  /// q-degree when every term agrees on it, otherwise nullopt (zero gives 0).
  std::optional<int> homogeneous_q_degree() const {
    if (terms_.empty()) return 0;
    int d = pbw_q_degree(*group_, terms_.begin()->first);
    for (const auto& [k, c] : terms_)
      if (pbw_q_degree(*group_, k) != d) return std::nullopt;
    return d;
  }

  /// Splits into homogeneous components keyed by q-degree.
  std::map<int, NilHeckeElement> components() const {
    std::map<int, NilHeckeElement> out;
    for (const auto& [k, c] : terms_) {
      auto it = out.try_emplace(pbw_q_degree(*group_, k), type_, rank_).first;
      it->second.add_term(k.w, k.r, c);
    }
    return out;
  }

  NilHeckeElement& operator+=(const NilHeckeElement& o) {
    check_same(o);
    for (const auto& [k, c] : o.terms_) add_term(k.w, k.r, c);
    return *this;
  }
  NilHeckeElement& operator-=(const NilHeckeElement& o) {
    check_same(o);
    for (const auto& [k, c] : o.terms_) add_term(k.w, k.r, S(0) - c);
    return *this;
  }
  friend NilHeckeElement operator+(NilHeckeElement a, const NilHeckeElement& b) { return a += b; }
  friend NilHeckeElement operator-(NilHeckeElement a, const NilHeckeElement& b) { return a -= b; }
  friend NilHeckeElement operator-(const NilHeckeElement& a) {
    NilHeckeElement out(a.type_, a.rank_);
    for (const auto& [k, c] : a.terms_) out.terms_.emplace(k, S(0) - c);
    return out;
  }
  NilHeckeElement& operator*=(const S& c) {
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second = it->second * c;
      if (scalar_is_zero(it->second)) it = terms_.erase(it);
      else ++it;
    }
    return *this;
  }
  friend NilHeckeElement operator*(NilHeckeElement a, const S& c) { return a *= c; }
  friend NilHeckeElement operator*(const S& c, NilHeckeElement a) { return a *= c; }

  friend bool operator==(const NilHeckeElement& a, const NilHeckeElement& b) {
    return a.type_ == b.type_ && a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const NilHeckeElement& a, const NilHeckeElement& b) { return !(a == b); }

  /// Action on the polynomial representation: sum of c x^r d_w(f).
  Poly operator()(const Poly& f) const {
    constexpr Variant v = Skew ? Variant::spin : Variant::even;
    Poly out = Poly::zero(rank_);
    for (const auto& [k, c] : terms_) {
      Poly g = apply_word(v, type_, rank_, group_->word(k.w), f);
      out += g.premul_monomial(k.r) * c;
    }
    return out;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      std::string cs = scalar_str(c);
      bool neg = !cs.empty() && cs[0] == '-';
      if (neg) cs = cs.substr(1);
      os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      first = false;
      std::string body = term_str(k);
      if (cs == "1" && !body.empty()) {
        os << body;
      } else {
        os << cs;
        if (!body.empty()) os << "*" << body;
      }
    }
    return os.str();
  }

 private:
  std::string term_str(const PbwKey& k) const {
    std::string out;
    if (total_degree(k.r) > 0) out = monomial_str(k.r);
    if (k.w != 0) {
      if (!out.empty()) out += " ";
      out += "d[";
      const auto& word = group_->word(k.w);
      for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(word[i]);
      }
      out += "]";
    }
    return out;
  }

  void check_same(const NilHeckeElement& o) const {
    if (type_ != o.type_ || rank_ != o.rank_)
      throw std::invalid_argument("nilHecke elements live in different algebras");
  }

  WeylType type_;
  int rank_;
  std::shared_ptr<const WeylGroup> group_;
  Terms terms_;
};

template <class S, bool Skew>
BasicPoly<S, Skew> apply_element(const NilHeckeElement<S, Skew>& a,
                                 const BasicPoly<S, Skew>& f) {
  return a(f);
}

namespace detail {

inline Int binomial(int a, int b) {
  if (b < 0 || b > a) return Int(0);
  Int out(1);
  for (int i = 1; i <= b; ++i) out = out * Int(a - b + i) / Int(i);
  return out;
}

}  // namespace detail

/// PBW keys of one homogeneous q-degree, in (group index, exponents) order.
inline std::vector<PbwKey> pbw_basis_of_degree(WeylType t, int n, int q_degree) {
  auto group = WeylGroup::get(t, n);
  std::vector<PbwKey> out;
  for (int w = 0; w < group->size(); ++w) {
    int twice = q_degree + 2 * group->length(w);
    if (twice < 0 || twice % 2) continue;
    for (auto& r : monomials_of_degree(n, twice / 2)) out.push_back({w, std::move(r)});
  }
  return out;
}

/// Extracts the PBW normal form of a black-box operator known to be a
/// homogeneous algebra element of the given q-degree.  Group elements are
/// processed by increasing length; the value on the family member s_w of
/// the not-yet-extracted remainder is kappa_w times the monomial prefix of
/// the d_w block.  The final residual is checked on all monomials up to
/// the verification degree d/2 + l(w0) + 2.
template <class S, bool Skew>
NilHeckeElement<S, Skew> pbw_decompose(
    const std::function<BasicPoly<S, Skew>(const BasicPoly<S, Skew>&)>& op, int q_degree,
    WeylType t, int n) {
  using Poly = BasicPoly<S, Skew>;
  auto table = SchubertValueTable<Skew>::get(t, n);
  const SchubertFamilyT<Skew>& fam = table->family();
  const WeylGroup& g = fam.group();

  NilHeckeElement<S, Skew> out(t, n);
  for (int u = 0; u < g.size(); ++u) {
    if (q_degree + 2 * g.length(u) < 0 || (q_degree + 2 * g.length(u)) % 2) continue;
    Poly val = op(fam.poly(u).template converted<S>());
    for (const auto& [k, c] : out.terms())
      val -= table->value(k.w, u).template converted<S>().premul_monomial(k.r) * c;
    if (val.is_zero()) continue;
    Poly pref = Poly::zero(n);
    if (!val.try_divide_scalar(scalar_from_int<S>(fam.kappa(u)), &pref))
      throw DomainDivisionError("domain cannot divide");
    for (const auto& [r, c] : pref.terms()) out.add_term(u, r, c);
  }

  int verify_degree = std::max(2, q_degree / 2 + g.longest_length() + 2);
  for (int m = 0; m <= verify_degree; ++m) {
    for (const auto& e : monomials_of_degree(n, m)) {
      Poly mono = Poly::monomial(n, e, S(1));
      if (op(mono) != out(mono)) throw ResidualError("residual nonzero");
    }
  }
  return out;
}

/// Product = operator composition (right factor acts first), recovered in
/// PBW form one homogeneous component pair at a time.
template <class S, bool Skew>
NilHeckeElement<S, Skew> operator*(const NilHeckeElement<S, Skew>& a,
                                   const NilHeckeElement<S, Skew>& b) {
  if (a.type() != b.type() || a.rank() != b.rank())
    throw std::invalid_argument("nilHecke elements live in different algebras");
  using Poly = BasicPoly<S, Skew>;
  NilHeckeElement<S, Skew> out(a.type(), a.rank());
  for (const auto& [da, ea] : a.components()) {
    for (const auto& [db, eb] : b.components()) {
      const auto& lhs = ea;
      const auto& rhs = eb;
      std::function<Poly(const Poly&)> op = [&lhs, &rhs](const Poly& f) { return lhs(rhs(f)); };
      out += pbw_decompose<S, Skew>(op, da + db, a.type(), a.rank());
    }
  }
  return out;
}

/// Matrix of right coefficients over the invariant ring: column w of the
/// matrix of T holds the decomposition T(s_w) = sum_v s_v entry(v, w).
template <class S, bool Skew>
struct MatrixOverLambda {
  using Poly = BasicPoly<S, Skew>;

  WeylType type;
  int rank;
  std::vector<std::vector<Poly>> entries;  // [row v][column w]

  static MatrixOverLambda zeros(WeylType t, int n) {
    MatrixOverLambda m{t, n, {}};
    int size = WeylGroup::get(t, n)->size();
    m.entries.assign(size, std::vector<Poly>(size, Poly::zero(n)));
    return m;
  }

  static MatrixOverLambda identity(WeylType t, int n) {
    MatrixOverLambda m = zeros(t, n);
    for (std::size_t i = 0; i < m.entries.size(); ++i)
      m.entries[i][i] = Poly::constant(n, S(1));
    return m;
  }

  int size() const { return static_cast<int>(entries.size()); }

  friend bool operator==(const MatrixOverLambda& a, const MatrixOverLambda& b) {
    return a.type == b.type && a.rank == b.rank && a.entries == b.entries;
  }
  friend bool operator!=(const MatrixOverLambda& a, const MatrixOverLambda& b) {
    return !(a == b);
  }

  friend MatrixOverLambda operator*(const MatrixOverLambda& a, const MatrixOverLambda& b) {
    if (a.type != b.type || a.rank != b.rank)
      throw std::invalid_argument("matrix kinds differ");
    MatrixOverLambda out = zeros(a.type, a.rank);
    for (int v = 0; v < a.size(); ++v)
      for (int u = 0; u < a.size(); ++u) {
        if (a.entries[v][u].is_zero()) continue;
        for (int w = 0; w < a.size(); ++w)
          out.entries[v][w] += a.entries[v][u] * b.entries[u][w];
      }
    return out;
  }

  /// The operator q-degree read off the entries, when consistent:
  /// entry (v, w) of x-degree p contributes 2 l(v) - 2 l(w) + 2p.
  std::optional<int> homogeneous_q_degree() const {
    auto group = WeylGroup::get(type, rank);
    std::optional<int> d;
    for (int v = 0; v < size(); ++v)
      for (int w = 0; w < size(); ++w) {
        const Poly& p = entries[v][w];
        if (p.is_zero()) continue;
        auto xd = p.homogeneous_degree();
        if (!xd) return std::nullopt;
        int here = 2 * group->length(v) - 2 * group->length(w) + 2 * *xd;
        if (d && *d != here) return std::nullopt;
        d = here;
      }
    return d ? d : std::optional<int>(0);
  }
};

template <class S, bool Skew>
MatrixOverLambda<S, Skew> matrix_unit(WeylType t, int n, int v, int w, S c = S(1)) {
  auto m = MatrixOverLambda<S, Skew>::zeros(t, n);
  m.entries.at(v).at(w) = BasicPoly<S, Skew>::constant(n, c);
  return m;
}

/// Matrix of an element acting on the polynomial representation, in the
/// Schubert basis with right coefficients.
template <class S, bool Skew>
MatrixOverLambda<S, Skew> to_matrix(const NilHeckeElement<S, Skew>& a) {
  WeylType t = a.type();
  int n = a.rank();
  auto table = SchubertValueTable<Skew>::get(t, n);
  auto m = MatrixOverLambda<S, Skew>::zeros(t, n);
  for (int w = 0; w < m.size(); ++w) {
    BasicPoly<S, Skew> val = BasicPoly<S, Skew>::zero(n);
    for (const auto& [k, c] : a.terms())
      val += table->value(k.w, w).template converted<S>().premul_monomial(k.r) * c;
    for (auto& [v, coeff] : schubert_decompose<S, Skew>(t, n, std::move(val)))
      m.entries[v][w] = std::move(coeff);
  }
  return m;
}

/// Inverts to_matrix for a homogeneous matrix by ascending-length value
/// peeling: the element is forced on s_u once all shorter coefficients are
/// known, dividing by kappa_u at each step.  Returns nullopt (UNSOLVABLE)
/// when a division leaves the scalar domain or the verification against
/// the input matrix fails.
template <class S, bool Skew>
std::optional<NilHeckeElement<S, Skew>> solve_preimage(const MatrixOverLambda<S, Skew>& m) {
  using Poly = BasicPoly<S, Skew>;
  WeylType t = m.type;
  int n = m.rank;
  auto table = SchubertValueTable<Skew>::get(t, n);
  const SchubertFamilyT<Skew>& fam = table->family();
  const WeylGroup& g = fam.group();

  NilHeckeElement<S, Skew> out(t, n);
  for (int u = 0; u < g.size(); ++u) {
    Poly target = Poly::zero(n);
    for (int v = 0; v < g.size(); ++v) {
      if (m.entries[v][u].is_zero()) continue;
      target += fam.poly(v).template converted<S>() * m.entries[v][u];
    }
    for (const auto& [k, c] : out.terms())
      target -= table->value(k.w, u).template converted<S>().premul_monomial(k.r) * c;
    if (target.is_zero()) continue;
    Poly pref = Poly::zero(n);
    if (!target.try_divide_scalar(scalar_from_int<S>(fam.kappa(u)), &pref))
      return std::nullopt;
    for (const auto& [r, c] : pref.terms()) out.add_term(u, r, c);
  }
  if (to_matrix(out) != m) return std::nullopt;
  return out;
}

enum class RankTarget { NC, NH, Lambda };

/// Basis-enumeration graded rank.  NC runs over {d_w}; NH over {x^r d_w}
/// with the monomial count per degree entering as an exact binomial; the
/// invariant ring reuses the generator-degree product series.  Even
/// variants carry no parity marker.
inline QPiSeries graded_rank(RankTarget what, Variant v, WeylType t, int n, int truncation) {
  check_rank(t, n);
  if (what == RankTarget::Lambda) return hilbert_series(v, t, n, truncation);
  bool with_pi = v == Variant::spin;
  auto group = WeylGroup::get(t, n);
  QPiSeries out;
  for (int w = 0; w < group->size(); ++w) {
    int len = group->length(w);
    if (what == RankTarget::NC) {
      out.add_term(-2 * len, with_pi ? (len & 1) : 0, Int(1));
      continue;
    }
    for (int m = 0; 2 * m - 2 * len <= truncation; ++m)
      out.add_term(2 * m - 2 * len, with_pi ? ((m + len) & 1) : 0, detail::binomial(m + n - 1, n - 1));
  }
  return out.truncated(truncation);
}

/// Closed form for the nilCoxeter rank: (pi q)^{-l(w0)} times the balanced
/// double-factorial Poincare polynomial of the group.
inline QPiSeries nilcoxeter_closed_rank(WeylType t, int n, bool with_pi) {
  check_rank(t, n);
  QPiSeries poincare;
  switch (t) {
    case WeylType::A: poincare = qpi_factorial(n, with_pi); break;
    case WeylType::B: poincare = qpi_double_factorial(2 * n, with_pi); break;
    case WeylType::D:
      poincare = qpi_integer(n, with_pi) * qpi_double_factorial(2 * n - 2, with_pi);
      break;
  }
  int l0 = weyl_length(weyl_longest(t, n));
  QPiSeries shift = with_pi ? QPiSeries::pi_q_power(-l0) : QPiSeries::monomial(-l0, 0, Int(1));
  return shift * poincare;
}

/// Closed form for the polynomial-ring rank 1/(1 - pi q^2)^n.
inline QPiSeries polynomial_closed_rank(int n, bool with_pi, int truncation) {
  QPiSeries den = QPiSeries::one() - QPiSeries::monomial(2, with_pi ? 1 : 0, Int(1));
  return QPiSeries::divide(QPiSeries::one(), den.pow(n), truncation);
}

/// Closed form for the whole algebra: nilCoxeter rank over (1 - pi q^2)^n.
inline QPiSeries nilhecke_closed_rank(WeylType t, int n, bool with_pi, int truncation) {
  QPiSeries den = QPiSeries::one() - QPiSeries::monomial(2, with_pi ? 1 : 0, Int(1));
  return QPiSeries::divide(nilcoxeter_closed_rank(t, n, with_pi), den.pow(n), truncation);
}

struct CenterDegreeCheck {
  int q_degree = 0;
  int solution_dim = 0;
  int expected_dim = 0;
  bool match = false;
};

struct CenterReport {
  WeylType type = WeylType::B;
  int rank = 0;
  int degree_cap = 0;
  bool commute_pass = false;
  bool converse_pass = false;
  std::vector<CenterDegreeCheck> degrees;
  bool all_pass() const { return commute_pass && converse_pass; }
};

namespace detail {

/// Monomial basis of the degree-d slice (in x-degree) of the symmetric
/// polynomials in the squared variables: orbit sums of even exponent
/// vectors.
inline std::vector<Exponents> squared_symmetric_basis(int n, int d) {
  std::vector<Exponents> reps;
  if (d < 0 || d % 2) return reps;
  for (auto& e : monomials_of_degree(n, d)) {
    bool even = true, sorted = true;
    for (int i = 0; i < n; ++i) {
      if (e[i] % 2) even = false;
      if (i && e[i - 1] < e[i]) sorted = false;
    }
    if (even && sorted) reps.push_back(e);
  }
  return reps;
}

}  // namespace detail

/// Orbit sum of one exponent vector over all coordinate permutations.
template <class S, bool Skew>
BasicPoly<S, Skew> orbit_sum(int n, Exponents rep) {
  std::sort(rep.begin(), rep.end());
  BasicPoly<S, Skew> out = BasicPoly<S, Skew>::zero(n);
  do {
    out.add_term(rep, S(1));
  } while (std::next_permutation(rep.begin(), rep.end()));
  return out;
}

/// Two-sided center check for the spin algebra.  Direction one: every
/// generator of the invariant ring commutes, as an operator, with every
/// algebra generator on all monomials up to the degree cap.  Direction
/// two: per q-degree, the space of PBW elements commuting with all
/// generators (an exact linear system over Q, with conditions imposed on
/// the family values, which pin an element uniquely) equals the space of
/// multiplications by symmetric polynomials in the squared variables.
inline CenterReport center_check(WeylType t, int n, int degree_cap) {
  using Poly = BasicPoly<Int, true>;
  check_rank(t, n);
  CenterReport report;
  report.type = t;
  report.rank = n;
  report.degree_cap = degree_cap;

  int gens = generator_count(t, n);
  auto table = SchubertValueTable<true>::get(t, n);
  const SchubertFamilyT<true>& fam = table->family();
  const WeylGroup& g = fam.group();

  report.commute_pass = true;
  for (int k = 1; k <= n; ++k) {
    Exponents twos(n, 0);
    for (int i = 0; i < k; ++i) twos[i] = 2;
    Poly eps = orbit_sum<Int, true>(n, twos);
    for (int m = 0; m <= degree_cap && report.commute_pass; ++m) {
      for (const auto& e : monomials_of_degree(n, m)) {
        Poly mono = Poly::monomial(n, e, Int(1));
        for (int i = 1; i <= n; ++i) {
          Poly xi = Poly::variable(n, i);
          if (eps * (xi * mono) != xi * (eps * mono)) report.commute_pass = false;
        }
        for (int i = 1; i <= gens; ++i) {
          Demazure d(Variant::spin, t, n, i);
          if (d(eps * mono) != eps * d(mono)) report.commute_pass = false;
        }
        if (!report.commute_pass) break;
      }
    }
  }

  report.converse_pass = true;
  for (int d = -degree_cap; d <= degree_cap; d += 2) {
    auto basis = pbw_basis_of_degree(t, n, d);
    std::vector<std::function<Poly(const Poly&)>> gen_ops;
    for (int i = 1; i <= n; ++i)
      gen_ops.emplace_back([i](const Poly& f) { return f.premul_variable(i); });
    for (int i = 1; i <= gens; ++i)
      gen_ops.emplace_back([t, n, i](const Poly& f) { return Demazure(Variant::spin, t, n, i)(f); });

    std::vector<RatVec> rows;
    for (std::size_t gi = 0; gi < gen_ops.size(); ++gi) {
      for (int u = 0; u < g.size(); ++u) {
        std::map<Exponents, RatVec> coords;
        for (std::size_t j = 0; j < basis.size(); ++j) {
          const PbwKey& k = basis[j];
          Poly zg = gen_ops[gi](fam.poly(u));
          zg = apply_word(Variant::spin, t, n, g.word(k.w), zg).premul_monomial(k.r);
          Poly gz = gen_ops[gi](table->value(k.w, u).premul_monomial(k.r));
          Poly comm = zg - gz;
          for (const auto& [e, c] : comm.terms()) {
            auto it = coords.try_emplace(e, RatVec(basis.size(), Rat(0))).first;
            it->second[j] += Rat(c);
          }
        }
        for (auto& kv : coords) rows.push_back(std::move(kv.second));
      }
    }

    std::vector<RatVec> solution;
    if (!basis.empty() && rows.empty()) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        RatVec v(basis.size(), Rat(0));
        v[j] = Rat(1);
        solution.push_back(std::move(v));
      }
    } else if (!basis.empty()) {
      solution = rat_kernel(std::move(rows));
    }

    std::vector<RatVec> expected;
    if (d >= 0 && d % 4 == 0) {
      for (const auto& rep : detail::squared_symmetric_basis(n, d / 2)) {
        Poly h = orbit_sum<Int, true>(n, rep);
        RatVec vec(basis.size(), Rat(0));
        for (const auto& [e, c] : h.terms()) {
          PbwKey key{0, e};
          auto it = std::lower_bound(basis.begin(), basis.end(), key);
          if (it == basis.end() || !(*it == key)) throw SpinnilError("missing PBW column");
          vec[static_cast<std::size_t>(it - basis.begin())] = Rat(c);
        }
        expected.push_back(std::move(vec));
      }
    }

    CenterDegreeCheck item;
    item.q_degree = d;
    item.solution_dim = static_cast<int>(solution.size());
    item.expected_dim = static_cast<int>(expected.size());
    item.match = rat_spans_equal(solution, expected);
    if (!item.match) report.converse_pass = false;
    report.degrees.push_back(item);
  }
  return report;
}

}  // namespace spinnil
