#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "spinnil/scalars.hpp"

namespace spinnil {

/// Laurent polynomial / truncated series in q with a parity marker p
/// satisfying p^2 = 1.  Keys are (q exponent, parity in {0,1}).
class QPiSeries {
 public:
  using Key = std::pair<int, int>;

  QPiSeries() = default;

  static QPiSeries one() { return monomial(0, 0, Int(1)); }
  static QPiSeries monomial(int q_exp, int parity, Int coeff) {
    QPiSeries s;
    s.add_term(q_exp, parity, std::move(coeff));
    return s;
  }
  /// (pq)^e
  static QPiSeries pi_q_power(int e) { return monomial(e, ((e % 2) + 2) % 2, Int(1)); }

  void add_term(int q_exp, int parity, Int coeff) {
    if (coeff == 0) return;
    auto it = terms_.find({q_exp, parity});
    if (it == terms_.end()) {
      terms_.emplace(Key{q_exp, parity}, std::move(coeff));
    } else {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const std::map<Key, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  QPiSeries& operator+=(const QPiSeries& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
  }
  QPiSeries& operator-=(const QPiSeries& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
  }
  friend QPiSeries operator+(QPiSeries a, const QPiSeries& b) { return a += b; }
  friend QPiSeries operator-(QPiSeries a, const QPiSeries& b) { return a -= b; }

  friend QPiSeries operator*(const QPiSeries& a, const QPiSeries& b) {
    QPiSeries out;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_)
        out.add_term(ka.first + kb.first, (ka.second + kb.second) % 2, ca * cb);
    return out;
  }
  QPiSeries& operator*=(const QPiSeries& o) { return *this = *this * o; }

  friend bool operator==(const QPiSeries& a, const QPiSeries& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const QPiSeries& a, const QPiSeries& b) { return !(a == b); }

  QPiSeries truncated(int max_q) const {
    QPiSeries out;
    for (const auto& [k, c] : terms_)
      if (k.first <= max_q) out.terms_.emplace(k, c);
    return out;
  }

  /// Forget the parity grading (set p := 1).
  QPiSeries specialize_pi_one() const {
    QPiSeries out;
    for (const auto& [k, c] : terms_) out.add_term(k.first, 0, c);
    return out;
  }

  QPiSeries pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power");
    QPiSeries out = one();
    for (int i = 0; i < e; ++i) out *= *this;
    return out;
  }

  /// Series quotient num/den keeping q-exponents <= max_q.  The lowest
  /// q-exponent of den must be carried by a single parity with coefficient
  /// +-1, which makes the expansion exact from below.
  static QPiSeries divide(QPiSeries num, const QPiSeries& den, int max_q) {
    if (den.terms_.empty()) throw std::invalid_argument("division by zero series");
    auto lead = den.terms_.begin();
    const int lead_q = lead->first.first;
    const int lead_p = lead->first.second;
    const Int lead_c = lead->second;
    {
      auto next = std::next(lead);
      if (next != den.terms_.end() && next->first.first == lead_q)
        throw std::invalid_argument("ambiguous lowest term in series division");
      if (lead_c != 1 && lead_c != -1)
        throw std::invalid_argument("lowest denominator coefficient must be a unit");
    }
    QPiSeries out;
    while (!num.terms_.empty()) {
      auto t = num.terms_.begin();
      int tq = t->first.first - lead_q;
      if (tq > max_q) break;
      int tp = (t->first.second + lead_p) % 2;
      Int tc = lead_c == 1 ? t->second : -t->second;
      out.add_term(tq, tp, tc);
      QPiSeries piece = monomial(tq, tp, tc);
      num -= piece * den;
    }
    return out;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      Int a = c;
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
      bool has_sym = k.second == 1 || k.first != 0;
      if (a != 1 || !has_sym) os << a.str();
      if (a != 1 && has_sym) os << "*";
      if (k.second == 1) {
        os << "pi";
        if (k.first != 0) os << "*";
      }
      if (k.first != 0) {
        os << "q";
        if (k.first != 1) os << "^" << k.first;
      }
    }
    return os.str();
  }

 private:
  std::map<Key, Int> terms_;
};

/// Balanced q-integer [m] = q^{m-1} + q^{m-3} + ... + q^{1-m}, optionally
/// with the parity marker: [m]_p = sum_k p^k q^{2k-(m-1)}.
inline QPiSeries qpi_integer(int m, bool with_pi) {
  QPiSeries s;
  for (int k = 0; k < m; ++k) s.add_term(2 * k - (m - 1), with_pi ? k % 2 : 0, Int(1));
  return s;
}

/// [m]!! = [m][m-2]...[2] for even m (empty product for m <= 0).
inline QPiSeries qpi_double_factorial(int m, bool with_pi) {
  QPiSeries s = QPiSeries::one();
  for (int k = m; k >= 2; k -= 2) s *= qpi_integer(k, with_pi);
  return s;
}

/// [m]! = [m][m-1]...[1].
inline QPiSeries qpi_factorial(int m, bool with_pi) {
  QPiSeries s = QPiSeries::one();
  for (int k = m; k >= 1; --k) s *= qpi_integer(k, with_pi);
  return s;
}

}  // namespace spinnil
