#pragma once

#include <atomic>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "spinnil/nilhecke.hpp"

namespace spinnil {

/// One verification outcome, shared by the CLI report and the acceptance
/// suite.  Ids are stable slugs; params describe the instance; details
/// carry counts or a counterexample.
struct CheckResult {
  std::string id;
  std::string params;
  bool pass = false;
  std::string details;
  bool gating = true;
};

/// Bounded deterministic randomness.  std::uniform_int_distribution is
/// implementation-defined, so raw engine output is reduced directly to
/// keep byte-identical reports across toolchains.
inline int rand_below(std::mt19937& rng, int bound) {
  return static_cast<int>(rng() % static_cast<unsigned int>(bound));
}

inline int rand_range(std::mt19937& rng, int lo, int hi) {
  return lo + rand_below(rng, hi - lo + 1);
}

template <class S, bool Skew>
BasicPoly<S, Skew> random_poly(int n, int max_degree, std::mt19937& rng) {
  BasicPoly<S, Skew> out = BasicPoly<S, Skew>::zero(n);
  int terms = rand_range(rng, 1, 4);
  for (int k = 0; k < terms; ++k) {
    Exponents e(n, 0);
    int left = rand_range(rng, 0, max_degree);
    for (int i = 0; i < n && left > 0; ++i) {
      e[i] = rand_range(rng, 0, left);
      left -= e[i];
    }
    int c = rand_range(rng, 1, 4) * (rand_below(rng, 2) ? 1 : -1);
    out.add_term(e, S(c));
  }
  if (out.is_zero()) out.add_term(Exponents(n, 0), S(1));
  return out;
}

template <class S, bool Skew>
NilHeckeElement<S, Skew> random_pbw_element(WeylType t, int n, int q_degree, int terms,
                                            std::mt19937& rng) {
  auto basis = pbw_basis_of_degree(t, n, q_degree);
  NilHeckeElement<S, Skew> out(t, n);
  if (basis.empty()) return out;
  for (int k = 0; k < terms; ++k) {
    const PbwKey& key = basis[static_cast<std::size_t>(rand_below(rng, static_cast<int>(basis.size())))];
    int c = rand_range(rng, 1, 3) * (rand_below(rng, 2) ? 1 : -1);
    out.add_term(key.w, key.r, S(c));
  }
  if (out.is_zero()) out.add_term(basis.front().w, basis.front().r, S(1));
  return out;
}

namespace detail {

inline std::string instance_params(Variant v, WeylType t, int n) {
  std::ostringstream os;
  os << "variant=" << variant_name(v) << " type=" << type_name(t) << " n=" << n;
  return os.str();
}

inline std::string instance_params(WeylType t, int n) {
  std::ostringstream os;
  os << "type=" << type_name(t) << " n=" << n;
  return os.str();
}

}  // namespace detail

/// Defining relations as operator identities on all monomials up to the cap.
inline CheckResult check_relations(Variant v, WeylType t, int n, int degree_cap) {
  RelationReport rep = verify_relations(v, t, n, degree_cap);
  CheckResult out;
  out.id = std::string("relations/") + variant_name(v);
  out.params = detail::instance_params(v, t, n) + " degree<=" + std::to_string(degree_cap);
  out.pass = rep.all_pass();
  std::ostringstream os;
  os << rep.results.size() << " relation instances in " << rep.family_count() << " families";
  if (!out.pass) {
    for (const auto& r : rep.results)
      if (!r.pass) {
        os << "; FIRST FAILURE " << r.family << " (" << r.desc << "): " << r.counterexample;
        break;
      }
  }
  out.details = os.str();
  return out;
}

/// |top-word value on the staircase monomial|: 1 for B, 2^{n-1} for D.
inline CheckResult check_schubert_constant(WeylType t, int n) {
  Int c = constant_check<true>(t, n);
  Int expected = 1;
  if (t == WeylType::D) expected = Int(1) << (n - 1);
  Int mag = c < 0 ? -c : c;
  CheckResult out;
  out.id = "schubert/constant";
  out.params = detail::instance_params(t, n);
  out.pass = mag == expected;
  out.details = "value " + c.str() + ", expected magnitude " + expected.str();
  return out;
}

/// Type B family against the staircase box: membership of every family
/// member in the box monomial span, rank |W| over Q, and unimodular
/// change of basis when the coordinate matrix is square.
inline CheckResult check_box_basis(int n) {
  WeylType t = WeylType::B;
  auto fam = SchubertFamily::get(t, n);
  Exponents cap = staircase(t, n);
  std::vector<Exponents> box;
  Exponents cur(n, 0);
  while (true) {
    box.push_back(cur);
    int pos = n - 1;
    while (pos >= 0 && cur[pos] == cap[pos]) cur[pos--] = 0;
    if (pos < 0) break;
    ++cur[pos];
  }
  std::map<Exponents, int> box_idx;
  for (const auto& e : box) box_idx.emplace(e, static_cast<int>(box_idx.size()));

  int size = fam->group().size();
  int escapes = 0;
  RatMat all_coords;
  std::map<Exponents, int> mono_idx;
  for (int i = 0; i < size; ++i)
    for (const auto& [e, c] : fam->poly(i).terms()) mono_idx.emplace(e, 0);
  int col = 0;
  for (auto& kv : mono_idx) kv.second = col++;
  for (int i = 0; i < size; ++i) {
    bool inside = true;
    RatVec row(mono_idx.size(), Rat(0));
    for (const auto& [e, c] : fam->poly(i).terms()) {
      if (!box_idx.count(e)) inside = false;
      row[mono_idx.at(e)] = Rat(c);
    }
    if (!inside) ++escapes;
    all_coords.push_back(std::move(row));
  }
  int rank = rat_rank(all_coords);

  bool count_ok = static_cast<int>(box.size()) == size;
  bool span_ok = escapes == 0;
  bool rank_ok = rank == size;
  std::string det_note = "determinant not defined (support escapes the box)";
  bool det_ok = false;
  if (count_ok && span_ok) {
    std::vector<std::vector<Int>> m(size, std::vector<Int>(box.size(), Int(0)));
    for (int i = 0; i < size; ++i)
      for (const auto& [e, c] : fam->poly(i).terms()) m[i][box_idx.at(e)] = c;
    Int det = int_det(m);
    det_ok = det == 1 || det == -1;
    det_note = "determinant " + det.str();
  }

  CheckResult out;
  out.id = "schubert/box-basis";
  out.params = detail::instance_params(t, n);
  out.pass = count_ok && span_ok && rank_ok && det_ok;
  std::ostringstream os;
  os << size << " members, box of " << box.size() << " monomials, rank " << rank << " over Q, "
     << escapes << " members with support outside the box; " << det_note;
  out.details = os.str();
  return out;
}

/// Linear independence of the family over Q.
inline CheckResult check_family_independence(WeylType t, int n) {
  auto fam = SchubertFamily::get(t, n);
  int size = fam->group().size();
  std::map<Exponents, int> mono_idx;
  for (int i = 0; i < size; ++i)
    for (const auto& [e, c] : fam->poly(i).terms()) mono_idx.emplace(e, 0);
  int col = 0;
  for (auto& kv : mono_idx) kv.second = col++;
  RatMat coords;
  for (int i = 0; i < size; ++i) {
    RatVec row(mono_idx.size(), Rat(0));
    for (const auto& [e, c] : fam->poly(i).terms()) row[mono_idx.at(e)] = Rat(c);
    coords.push_back(std::move(row));
  }
  int rank = rat_rank(coords);
  CheckResult out;
  out.id = "schubert/independence";
  out.params = detail::instance_params(t, n);
  out.pass = rank == size;
  out.details = "rank " + std::to_string(rank) + " of " + std::to_string(size);
  return out;
}

/// Full column rank of the PBW evaluation matrices.  The value table is
/// verified to be length-triangular with nonzero constants on the
/// diagonal, which forces full rank in every degree; for n <= 2 the dense
/// rank over Q is recomputed literally as a cross-check.
inline CheckResult check_pbw_rank(WeylType t, int n, int max_abs_degree) {
  auto table = SchubertValueTable<true>::get(t, n);
  const SchubertFamilyT<true>& fam = table->family();
  const WeylGroup& g = fam.group();
  int size = g.size();

  bool triangular = true;
  for (int w = 0; w < size && triangular; ++w)
    for (int u = 0; u < size; ++u) {
      const auto& val = table->value(w, u);
      if (g.length(w) > g.length(u) || (g.length(w) == g.length(u) && w != u)) {
        if (!val.is_zero()) triangular = false;
      } else if (w == u) {
        if (val.is_zero() || val != SkewPoly::constant(n, fam.kappa(u))) triangular = false;
      }
      if (!triangular) break;
    }

  bool dense_ok = true;
  int dense_degrees = 0;
  long long columns_total = 0;
  for (int d = -max_abs_degree; d <= max_abs_degree; d += 2) {
    auto keys = pbw_basis_of_degree(t, n, d);
    columns_total += static_cast<long long>(keys.size());
    if (n > 2 || keys.empty()) continue;
    ++dense_degrees;
    std::map<std::pair<int, Exponents>, int> coord_idx;
    std::vector<std::map<std::pair<int, Exponents>, Int>> cols;
    for (const auto& k : keys) {
      std::map<std::pair<int, Exponents>, Int> col;
      for (int u = 0; u < size; ++u) {
        SkewPoly p = table->value(k.w, u).premul_monomial(k.r);
        for (const auto& [e, c] : p.terms()) {
          col[{u, e}] = c;
          coord_idx.emplace(std::make_pair(u, e), 0);
        }
      }
      cols.push_back(std::move(col));
    }
    int next = 0;
    for (auto& kv : coord_idx) kv.second = next++;
    RatMat rows;
    for (const auto& col : cols) {
      RatVec row(coord_idx.size(), Rat(0));
      for (const auto& [key, c] : col) row[coord_idx.at(key)] = Rat(c);
      rows.push_back(std::move(row));
    }
    if (rat_rank(rows) != static_cast<int>(keys.size())) dense_ok = false;
  }

  CheckResult out;
  out.id = "pbw/full-rank";
  out.params = detail::instance_params(t, n) + " |degree|<=" + std::to_string(max_abs_degree);
  out.pass = triangular && dense_ok;
  std::ostringstream os;
  os << "value table length-triangular with unit-free constants: " << (triangular ? "yes" : "NO")
     << "; " << columns_total << " basis columns across degrees";
  if (n <= 2) os << "; dense rank confirmed in " << dense_degrees << " degrees";
  out.details = os.str();
  return out;
}

/// Every invariant-ring generator is annihilated by every Demazure
/// operator.
inline CheckResult check_lambda_kernel(WeylType t, int n) {
  CheckResult out;
  out.id = "lambda/kernel";
  out.params = detail::instance_params(t, n);
  out.pass = true;
  std::ostringstream os;
  for (int k = 1; k <= n; ++k) {
    auto cert = in_lambda(t, n, elementary<true>(t, n, k));
    if (!cert.member) {
      out.pass = false;
      os << "generator " << k << " escapes the kernel; ";
    }
  }
  os << n << " generators checked";
  out.details = os.str();
  return out;
}

/// Generator-degree enumeration of the invariant ring against the closed
/// rank formula.
inline CheckResult check_hilbert(WeylType t, int n, int truncation) {
  QPiSeries enumerated = hilbert_series(Variant::spin, t, n, truncation);
  QPiSeries closed = lambda_closed_rank(t, n, truncation);
  CheckResult out;
  out.id = "lambda/hilbert";
  out.params = detail::instance_params(t, n) + " truncation=" + std::to_string(truncation);
  out.pass = enumerated == closed;
  out.details = out.pass ? "series agree coefficientwise"
                         : "enumerated " + enumerated.str() + " vs closed " + closed.str();
  return out;
}

/// Shift identity between the generators in x_2..x_n and x_1..x_n.
inline CheckResult check_kk(int n) {
  auto checks = kk_identity_check(n);
  CheckResult out;
  out.id = "lambda/shift-identity";
  out.params = "n=" + std::to_string(n);
  out.pass = true;
  for (const auto& c : checks)
    if (!c.pass) out.pass = false;
  out.details = std::to_string(checks.size()) + " values of k";
  return out;
}

/// Random decompose-then-expand round trips with invariant-coefficient
/// certificates.
template <class S>
CheckResult check_free_module(WeylType t, int n, int count, int max_degree,
                              unsigned int seed) {
  std::mt19937 rng(seed);
  CheckResult out;
  out.id = "free-module/round-trip";
  out.params = detail::instance_params(t, n) + " domain=" + domain_name(domain_of<S>::value) + " count=" +
               std::to_string(count) + " degree<=" + std::to_string(max_degree);
  out.pass = true;
  int certified = 0;
  for (int i = 0; i < count && out.pass; ++i) {
    BasicPoly<S, true> f = random_poly<S, true>(n, max_degree, rng);
    try {
      auto coeffs = schubert_decompose<S, true>(t, n, f);
      for (const auto& [w, c] : coeffs) {
        auto cert = in_lambda(t, n, c);
        if (!cert.member) {
          out.pass = false;
          out.details = "coefficient escapes the invariant ring on sample " + std::to_string(i);
        }
        ++certified;
      }
      if (schubert_expand<S, true>(t, n, coeffs) != f) {
        out.pass = false;
        out.details = "round trip mismatch on sample " + std::to_string(i);
      }
    } catch (const SpinnilError& err) {
      out.pass = false;
      out.details = std::string("decomposition failed on sample ") + std::to_string(i) + ": " +
                    err.what();
    }
  }
  if (out.pass)
    out.details = std::to_string(count) + " round trips, " + std::to_string(certified) +
                  " coefficients certified";
  return out;
}

/// to_matrix respects products: all generator pairs plus random
/// homogeneous pairs.
template <class S>
CheckResult check_matrix_homomorphism(WeylType t, int n, int random_pairs, unsigned int seed) {
  using NHE = NilHeckeElement<S, true>;
  std::vector<NHE> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(NHE::variable(t, n, i));
  for (int i = 1; i <= generator_count(t, n); ++i) gens.push_back(NHE::demazure(t, n, i));

  CheckResult out;
  out.id = "matrix/homomorphism";
  out.params = detail::instance_params(t, n) + " domain=" + domain_name(domain_of<S>::value) + " random-pairs=" +
               std::to_string(random_pairs);
  out.pass = true;
  int checked = 0;
  for (const auto& a : gens)
    for (const auto& b : gens) {
      if (to_matrix(a * b) != to_matrix(a) * to_matrix(b)) out.pass = false;
      ++checked;
    }
  std::mt19937 rng(seed);
  for (int i = 0; i < random_pairs; ++i) {
    NHE a = random_pbw_element<S, true>(t, n, 2 * rand_range(rng, -2, 2), 2, rng);
    NHE b = random_pbw_element<S, true>(t, n, 2 * rand_range(rng, -2, 2), 2, rng);
    if (to_matrix(a * b) != to_matrix(a) * to_matrix(b)) out.pass = false;
    ++checked;
  }
  out.details = std::to_string(checked) + " pairs";
  return out;
}

/// Solvability of every constant matrix unit over the given scalar
/// domain; solves run in parallel.
template <class S, bool Skew>
CheckResult check_matrix_units(WeylType t, int n) {
  constexpr Variant v = Skew ? Variant::spin : Variant::even;
  int size = WeylGroup::get(t, n)->size();
  std::vector<char> solved(static_cast<std::size_t>(size) * size, 0);
  SchubertValueTable<Skew>::get(t, n);
  parallel_for(solved.size(), [&](std::size_t idx) {
    int vv = static_cast<int>(idx) / size;
    int ww = static_cast<int>(idx) % size;
    auto unit = matrix_unit<S, Skew>(t, n, vv, ww);
    auto sol = solve_preimage(unit);
    solved[idx] = sol.has_value() && to_matrix(*sol) == unit;
  });
  int ok = 0;
  for (char c : solved) ok += c;
  CheckResult out;
  out.id = std::string("matrix/units/") + variant_name(v);
  out.params = detail::instance_params(t, n) + " domain=" + domain_name(domain_of<S>::value);
  out.pass = ok == static_cast<int>(solved.size());
  out.details = std::to_string(ok) + " of " + std::to_string(solved.size()) + " units solved";
  return out;
}

/// Enumeration series of the nil tower against the closed forms.
inline CheckResult check_rank_series(Variant v, WeylType t, int n, int truncation) {
  bool with_pi = v == Variant::spin;
  bool nc_ok = graded_rank(RankTarget::NC, v, t, n, truncation) ==
               nilcoxeter_closed_rank(t, n, with_pi);
  bool nh_ok = graded_rank(RankTarget::NH, v, t, n, truncation) ==
               nilhecke_closed_rank(t, n, with_pi, truncation);
  CheckResult out;
  out.id = "rank-series/closed-form";
  out.params = detail::instance_params(v, t, n) + " truncation=" + std::to_string(truncation);
  out.pass = nc_ok && nh_ok;
  std::ostringstream os;
  os << "nil tower " << (nc_ok ? "ok" : "MISMATCH") << ", full algebra "
     << (nh_ok ? "ok" : "MISMATCH");
  out.details = os.str();
  return out;
}

/// Both directions of the center characterization.
inline CheckResult check_center(WeylType t, int n, int degree_cap) {
  CenterReport rep = center_check(t, n, degree_cap);
  CheckResult out;
  out.id = "center/two-sided";
  out.params = detail::instance_params(t, n) + " degree<=" + std::to_string(degree_cap);
  out.pass = rep.all_pass();
  std::ostringstream os;
  os << "commuting direction " << (rep.commute_pass ? "ok" : "FAIL") << "; converse ";
  if (rep.converse_pass) {
    os << "ok in all " << rep.degrees.size() << " degree slices";
  } else {
    os << "FAIL:";
    for (const auto& item : rep.degrees)
      if (!item.match)
        os << " [q-degree " << item.q_degree << ": commutant dimension " << item.solution_dim
           << ", expected " << item.expected_dim << "]";
  }
  out.details = os.str();
  return out;
}

/// Even kernels equal classical symmetrizations, degree by degree.
inline CheckResult check_even_invariants(WeylType t, int n, int degree_cap) {
  CheckResult out;
  out.id = "even/invariants";
  out.params = detail::instance_params(t, n) + " degree<=" + std::to_string(degree_cap);
  out.pass = true;
  for (int d = 1; d <= degree_cap; ++d)
    if (!even_invariants_match_kernel(t, n, d)) out.pass = false;
  out.details = std::to_string(degree_cap) + " degree slices";
  return out;
}

/// Skew and plain adjacent-swap operator kernels agree on polynomials in
/// squared variables, per degree.
inline CheckResult check_kernel_correspondence(int n, int degree_cap) {
  CheckResult out;
  out.id = "even/kernel-correspondence";
  out.params = "n=" + std::to_string(n) + " degree<=" + std::to_string(degree_cap);
  out.pass = true;
  int slices = 0;
  for (int d = 2; d <= degree_cap; d += 2) {
    std::vector<Exponents> evens;
    for (const auto& e : monomials_of_degree(n, d)) {
      bool all_even = true;
      for (int x : e) all_even = all_even && x % 2 == 0;
      if (all_even) evens.push_back(e);
    }
    if (evens.empty() || n < 2) continue;
    ++slices;
    auto lower = monomials_of_degree(n, d - 1);
    std::map<Exponents, int> lidx;
    for (const auto& e : lower) lidx.emplace(e, static_cast<int>(lidx.size()));
    RatMat spin_stack, even_stack;
    for (int i = 1; i < n; ++i) {
      Demazure ds(Variant::spin, WeylType::A, n, i);
      Demazure de(Variant::even, WeylType::A, n, i);
      RatMat ms(lower.size(), RatVec(evens.size(), Rat(0)));
      RatMat me(lower.size(), RatVec(evens.size(), Rat(0)));
      for (std::size_t j = 0; j < evens.size(); ++j) {
        auto img_s = ds(SkewPoly::monomial(n, evens[j], Int(1)));
        for (const auto& [e, c] : img_s.terms()) ms[lidx.at(e)][j] = Rat(c);
        auto img_e = de(EvenPoly::monomial(n, evens[j], Int(1)));
        for (const auto& [e, c] : img_e.terms()) me[lidx.at(e)][j] = Rat(c);
      }
      spin_stack.insert(spin_stack.end(), ms.begin(), ms.end());
      even_stack.insert(even_stack.end(), me.begin(), me.end());
    }
    if (!rat_spans_equal(rat_kernel(std::move(spin_stack)), rat_kernel(std::move(even_stack))))
      out.pass = false;
  }
  out.details = std::to_string(slices) + " even-degree slices";
  return out;
}

}  // namespace spinnil
