#pragma once

#include <atomic>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "spinnil/io.hpp"
#include "spinnil/parallel.hpp"
#include "spinnil/skewpoly.hpp"
#include "spinnil/weyl.hpp"

namespace spinnil {

inline std::atomic<long>& division_not_exact_events() {
  static std::atomic<long> count{0};
  return count;
}

/// Exact division of a commutative polynomial by cu*x_u + cv*x_v
/// (v = 0 for a single-variable divisor).  Throws if not exact.
template <class S>
BasicPoly<S, false> divide_linear(BasicPoly<S, false> f, int rank, int u, const S& cu, int v,
                                  const S& cv) {
  using Poly = BasicPoly<S, false>;
  Poly divisor = Poly::monomial(rank, unit_exponent(rank, u), cu);
  if (v > 0) divisor.add_term(unit_exponent(rank, v), cv);
  Poly out = Poly::zero(rank);
  while (!f.is_zero()) {
    const auto& lead = *f.terms().rbegin();
    Exponents e = lead.first;
    S q;
    if (e[u - 1] == 0 || !try_divide(lead.second, cu, &q)) {
      ++division_not_exact_events();
      throw DivisionNotExactError("division by linear form not exact");
    }
    --e[u - 1];
    Poly piece = Poly::monomial(rank, e, std::move(q));
    out += piece;
    f -= piece * divisor;
  }
  return out;
}

/// A single Demazure operator.  Spin operators act on skew polynomials by
/// structural recursion via the twisted Leibniz rule; even operators act on
/// commutative polynomials as (f - s(f)) / alpha with exact division.
class Demazure {
 public:
  Demazure(Variant variant, WeylType type, int rank, int index)
      : variant_(variant), type_(type), rank_(rank), index_(index) {
    check_rank(type, rank);
    if (index < 1 || index > generator_count(type, rank))
      throw std::out_of_range("operator index out of range");
  }

  Variant variant() const { return variant_; }
  WeylType type() const { return type_; }
  int rank() const { return rank_; }
  int index() const { return index_; }
  bool special() const { return type_ != WeylType::A && index_ == rank_; }
  PointAction action() const { return PointAction(variant_, type_, rank_, index_); }

  /// Base value on a single variable x_j (always 0 or +-1).
  int base_value(int j) const {
    if (!special()) return j == index_ || j == index_ + 1 ? 1 : 0;
    if (type_ == WeylType::B) return j == rank_ ? 1 : 0;
    if (j == rank_) return -1;
    return j == rank_ - 1 ? 1 : 0;
  }

  template <class S, bool Skew>
  BasicPoly<S, Skew> operator()(const BasicPoly<S, Skew>& f) const {
    if constexpr (Skew) {
      if (variant_ != Variant::spin) throw std::invalid_argument("spin operator expected");
    } else {
      if (variant_ != Variant::even) throw std::invalid_argument("even operator expected");
    }
    BasicPoly<S, Skew> out = BasicPoly<S, Skew>::zero(rank_);
    for (const auto& [e, c] : f.terms()) {
      const BasicPoly<Int, Skew>* img;
      if constexpr (Skew) {
        img = &spin_image(e);
      } else {
        img = &even_image(e);
      }
      for (const auto& [e2, c2] : img->terms()) out.add_term(e2, c * scalar_from_int<S>(c2));
    }
    return out;
  }

 private:
  using Key = std::tuple<int, int, int, Exponents>;
  Key key(const Exponents& e) const {
    return {static_cast<int>(type_), rank_, index_, e};
  }

  // d(x_i m) = d(x_i) m + s(x_i) d(m), recursing on the first variable.
  const BasicPoly<Int, true>& spin_image(const Exponents& e) const {
    thread_local std::map<Key, BasicPoly<Int, true>> cache;
    auto it = cache.find(key(e));
    if (it != cache.end()) return it->second;
    using Poly = BasicPoly<Int, true>;
    Poly res = Poly::zero(rank_);
    int i = 0;
    while (i < rank_ && e[i] == 0) ++i;
    if (i < rank_) {
      Exponents rest = e;
      --rest[i];
      if (int b = base_value(i + 1); b != 0) res.add_term(rest, Int(b));
      const Poly& sub = spin_image(rest);
      VarImage v = action().image(i + 1);
      Poly shifted = sub.premul_variable(v.var);
      if (v.sign < 0) {
        res -= shifted;
      } else {
        res += shifted;
      }
    }
    return cache.emplace(key(e), std::move(res)).first->second;
  }

  const BasicPoly<Int, false>& even_image(const Exponents& e) const {
    thread_local std::map<Key, BasicPoly<Int, false>> cache;
    auto it = cache.find(key(e));
    if (it != cache.end()) return it->second;
    using Poly = BasicPoly<Int, false>;
    Poly m = Poly::monomial(rank_, e, Int(1));
    Poly diff = m;
    diff -= action()(m);
    Poly quot = Poly::zero(rank_);
    if (!diff.is_zero()) {
      if (!special()) {
        quot = divide_linear(std::move(diff), rank_, index_, Int(1), index_ + 1, Int(-1));
      } else if (type_ == WeylType::B) {
        quot = divide_linear(std::move(diff), rank_, rank_, Int(2), 0, Int(0));
      } else {
        quot = divide_linear(std::move(diff), rank_, rank_ - 1, Int(1), rank_, Int(1));
      }
    }
    return cache.emplace(key(e), std::move(quot)).first->second;
  }

  Variant variant_;
  WeylType type_;
  int rank_;
  int index_;
};

/// Operator word applied as a product read left to right, so the rightmost
/// letter acts first.  Words need not be reduced.
template <class S, bool Skew>
BasicPoly<S, Skew> apply_word(Variant v, WeylType t, int n, const std::vector<int>& word,
                              BasicPoly<S, Skew> f) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (f.is_zero()) break;
    f = Demazure(v, t, n, *it)(f);
  }
  return f;
}

/// Point action of a full group element, via a word for it.
template <class S, bool Skew>
BasicPoly<S, Skew> apply_point_word(Variant v, WeylType t, int n, const std::vector<int>& word,
                                    BasicPoly<S, Skew> f) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) f = PointAction(v, t, n, *it)(f);
  return f;
}

// ---------------------------------------------------------------------------
// Operator expressions and relation suites
// ---------------------------------------------------------------------------

struct OpAtom {
  bool is_op;  // true: Demazure operator; false: left multiplication by x_index
  int index;
};

struct OpSummand {
  Int coeff;
  std::vector<OpAtom> atoms;
};

struct OpExpr {
  std::vector<OpSummand> summands;

  OpExpr& add(Int coeff, std::vector<OpAtom> atoms) {
    summands.push_back({std::move(coeff), std::move(atoms)});
    return *this;
  }

  template <class S, bool Skew>
  BasicPoly<S, Skew> operator()(Variant v, WeylType t, int n,
                                const BasicPoly<S, Skew>& f) const {
    BasicPoly<S, Skew> out = BasicPoly<S, Skew>::zero(n);
    for (const auto& [coeff, atoms] : summands) {
      BasicPoly<S, Skew> g = f;
      for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) {
        if (g.is_zero()) break;
        if (it->is_op) {
          g = Demazure(v, t, n, it->index)(g);
        } else {
          g = g.premul_variable(it->index);
        }
      }
      S c = scalar_from_int<S>(coeff);
      for (const auto& [e, cc] : g.terms()) out.add_term(e, c * cc);
    }
    return out;
  }

  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [coeff, atoms] : summands) {
      Int a = coeff;
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
      if (a != 1 || atoms.empty()) os << a.str();
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (i > 0 || a != 1) os << " ";
        os << (atoms[i].is_op ? "d" : "x") << atoms[i].index;
      }
    }
    return os.str();
  }
};

inline OpAtom D(int i) { return {true, i}; }
inline OpAtom X(int i) { return {false, i}; }

struct RelationInstance {
  std::string family;
  std::string desc;  // the expression that must vanish identically
  OpExpr expr;
};

namespace detail {

inline void add_instance(std::vector<RelationInstance>& out, std::string family, OpExpr expr) {
  std::string desc = expr.str() + " = 0";
  out.push_back({std::move(family), std::move(desc), std::move(expr)});
}

// Families shared by every spin type: the ring relation and the type A
// operator relations for indices 1..m (m = number of adjacent-swap ops).
inline void spin_a_instances(std::vector<RelationInstance>& out, int n, int m) {
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      add_instance(out, "ring.anti", OpExpr().add(1, {X(i), X(j)}).add(1, {X(j), X(i)}));
  for (int i = 1; i <= m; ++i) add_instance(out, "a.nil", OpExpr().add(1, {D(i), D(i)}));
  for (int i = 1; i + 1 <= m; ++i)
    add_instance(out, "a.braid",
                 OpExpr().add(1, {D(i), D(i + 1), D(i)}).add(-1, {D(i + 1), D(i), D(i + 1)}));
  for (int i = 1; i <= m; ++i)
    for (int j = i + 2; j <= m; ++j)
      add_instance(out, "a.far.dd", OpExpr().add(1, {D(i), D(j)}).add(1, {D(j), D(i)}));
  for (int i = 1; i <= m; ++i) {
    add_instance(out, "a.mixed.xd",
                 OpExpr().add(1, {X(i), D(i)}).add(1, {D(i), X(i + 1)}).add(-1, {}));
    add_instance(out, "a.mixed.dx",
                 OpExpr().add(1, {D(i), X(i)}).add(1, {X(i + 1), D(i)}).add(-1, {}));
    for (int j = 1; j <= n; ++j) {
      if (j == i || j == i + 1) continue;
      add_instance(out, "a.far.dx", OpExpr().add(1, {D(i), X(j)}).add(1, {X(j), D(i)}));
    }
  }
}

}  // namespace detail

inline std::vector<RelationInstance> relation_instances(Variant v, WeylType t, int n) {
  check_rank(t, n);
  std::vector<RelationInstance> out;
  using detail::add_instance;
  if (v == Variant::spin) {
    detail::spin_a_instances(out, n, n - 1);
    if (t == WeylType::B) {
      add_instance(out, "b.nil", OpExpr().add(1, {D(n), D(n)}));
      if (n >= 2)
        add_instance(out, "b.braid4",
                     OpExpr()
                         .add(1, {D(n), D(n - 1), D(n), D(n - 1)})
                         .add(1, {D(n - 1), D(n), D(n - 1), D(n)}));
      for (int i = 1; i <= n - 2; ++i)
        add_instance(out, "b.far.dd", OpExpr().add(1, {D(n), D(i)}).add(1, {D(i), D(n)}));
      add_instance(out, "b.mixed",
                   OpExpr().add(1, {D(n), X(n)}).add(1, {X(n), D(n)}).add(-1, {}));
      for (int i = 1; i <= n - 1; ++i)
        add_instance(out, "b.far.dx", OpExpr().add(1, {D(n), X(i)}).add(1, {X(i), D(n)}));
    } else if (t == WeylType::D) {
      add_instance(out, "d.nil", OpExpr().add(1, {D(n), D(n)}));
      if (n >= 3)
        add_instance(out, "d.braid",
                     OpExpr()
                         .add(1, {D(n), D(n - 2), D(n)})
                         .add(-1, {D(n - 2), D(n), D(n - 2)}));
      for (int i = 1; i <= n - 3; ++i)
        add_instance(out, "d.far.dd", OpExpr().add(1, {D(n), D(i)}).add(1, {D(i), D(n)}));
      add_instance(out, "d.comm.dd",
                   OpExpr().add(1, {D(n), D(n - 1)}).add(-1, {D(n - 1), D(n)}));
      add_instance(out, "d.mixed.xd",
                   OpExpr().add(1, {X(n - 1), D(n)}).add(-1, {D(n), X(n)}).add(-1, {}));
      add_instance(out, "d.mixed.dx",
                   OpExpr().add(1, {D(n), X(n - 1)}).add(-1, {X(n), D(n)}).add(-1, {}));
      for (int i = 1; i <= n - 2; ++i)
        add_instance(out, "d.far.dx", OpExpr().add(1, {D(n), X(i)}).add(1, {X(i), D(n)}));
    }
    return out;
  }
  // Even variant: Coxeter-nil relations plus the duality relations
  // x d_i - d_i s_i(x) = <x, alpha_i^vee> for every variable x.
  const int m = n - 1;  // adjacent-swap operator indices
  for (int i = 1; i <= m; ++i) add_instance(out, "even.a.nil", OpExpr().add(1, {D(i), D(i)}));
  for (int i = 1; i + 1 <= m; ++i)
    add_instance(out, "even.a.braid",
                 OpExpr().add(1, {D(i), D(i + 1), D(i)}).add(-1, {D(i + 1), D(i), D(i + 1)}));
  for (int i = 1; i <= m; ++i)
    for (int j = i + 2; j <= m; ++j)
      add_instance(out, "even.a.far", OpExpr().add(1, {D(i), D(j)}).add(-1, {D(j), D(i)}));
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      OpExpr e;
      e.add(1, {X(j), D(i)});
      // s_i swaps j in {i, i+1}
      int img = j == i ? i + 1 : j == i + 1 ? i : j;
      e.add(-1, {D(i), X(img)});
      int pairing = j == i ? 1 : j == i + 1 ? -1 : 0;
      if (pairing != 0) e.add(-pairing, {});
      add_instance(out, "even.a.dual", std::move(e));
    }
  }
  if (t == WeylType::B) {
    add_instance(out, "even.b.nil", OpExpr().add(1, {D(n), D(n)}));
    if (n >= 2)
      add_instance(out, "even.b.braid4",
                   OpExpr()
                       .add(1, {D(n), D(n - 1), D(n), D(n - 1)})
                       .add(-1, {D(n - 1), D(n), D(n - 1), D(n)}));
    for (int i = 1; i <= n - 2; ++i)
      add_instance(out, "even.b.far", OpExpr().add(1, {D(n), D(i)}).add(-1, {D(i), D(n)}));
    for (int j = 1; j <= n; ++j) {
      OpExpr e;
      e.add(1, {X(j), D(n)});
      if (j == n) {
        e.add(1, {D(n), X(n)}).add(-1, {});  // s(x_n) = -x_n, pairing 1 with alpha = 2 x_n
      } else {
        e.add(-1, {D(n), X(j)});
      }
      add_instance(out, "even.b.dual", std::move(e));
    }
  } else if (t == WeylType::D) {
    add_instance(out, "even.d.nil", OpExpr().add(1, {D(n), D(n)}));
    if (n >= 3)
      add_instance(out, "even.d.braid",
                   OpExpr().add(1, {D(n), D(n - 2), D(n)}).add(-1, {D(n - 2), D(n), D(n - 2)}));
    add_instance(out, "even.d.comm",
                 OpExpr().add(1, {D(n), D(n - 1)}).add(-1, {D(n - 1), D(n)}));
    for (int i = 1; i <= n - 3; ++i)
      add_instance(out, "even.d.far", OpExpr().add(1, {D(n), D(i)}).add(-1, {D(i), D(n)}));
    for (int j = 1; j <= n; ++j) {
      OpExpr e;
      e.add(1, {X(j), D(n)});
      if (j == n) {
        e.add(1, {D(n), X(n - 1)}).add(-1, {});  // s(x_n) = -x_{n-1}
      } else if (j == n - 1) {
        e.add(1, {D(n), X(n)}).add(-1, {});  // s(x_{n-1}) = -x_n
      } else {
        e.add(-1, {D(n), X(j)});
      }
      add_instance(out, "even.d.dual", std::move(e));
    }
  }
  return out;
}

struct RelationResult {
  std::string family;
  std::string desc;
  bool pass = false;
  std::string counterexample;
};

struct RelationReport {
  Variant variant;
  WeylType type;
  int rank = 0;
  int degree_cap = 0;
  std::vector<RelationResult> results;

  bool all_pass() const {
    for (const auto& r : results)
      if (!r.pass) return false;
    return true;
  }
  int family_count() const {
    std::set<std::string> fams;
    for (const auto& r : results) fams.insert(r.family);
    return static_cast<int>(fams.size());
  }
};

template <bool Skew>
RelationReport verify_relations_impl(Variant v, WeylType t, int n, int degree_cap) {
  auto instances = relation_instances(v, t, n);
  auto monos = monomials_up_to_degree(n, degree_cap);
  RelationReport report{v, t, n, degree_cap, std::vector<RelationResult>(instances.size())};
  parallel_for(instances.size(), [&](std::size_t idx) {
    const auto& inst = instances[idx];
    RelationResult r{inst.family, inst.desc, true, ""};
    for (const auto& e : monos) {
      auto f = BasicPoly<Int, Skew>::monomial(n, e, Int(1));
      try {
        auto val = inst.expr(v, t, n, f);
        if (!val.is_zero()) {
          r.pass = false;
          r.counterexample = monomial_str(e) + " -> " + poly_str(val);
          break;
        }
      } catch (const SpinnilError& err) {
        r.pass = false;
        r.counterexample = monomial_str(e) + " -> error: " + err.what();
        break;
      }
    }
    report.results[idx] = std::move(r);
  });
  return report;
}

inline RelationReport verify_relations(Variant v, WeylType t, int n, int degree_cap) {
  return v == Variant::spin ? verify_relations_impl<true>(v, t, n, degree_cap)
                            : verify_relations_impl<false>(v, t, n, degree_cap);
}

}  // namespace spinnil
