#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

#include "spinnil/common.hpp"

namespace spinnil {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Scalar domains the decomposition / preimage routines can run over.
enum class Domain { integer, dyadic, rational };

inline const char* domain_name(Domain d) {
  switch (d) {
    case Domain::integer: return "int";
    case Domain::dyadic: return "dyadic";
    default: return "rational";
  }
}

/// Element of Z[1/2], stored as odd * 2^exp with odd odd or zero.
class Dyadic {
 public:
  Dyadic() : odd_(0), exp_(0) {}
  Dyadic(int v) : odd_(v), exp_(0) { normalize(); }
  Dyadic(Int v) : odd_(std::move(v)), exp_(0) { normalize(); }
  Dyadic(Int num, int exp) : odd_(std::move(num)), exp_(exp) { normalize(); }

  const Int& odd_part() const { return odd_; }
  int exponent() const { return exp_; }
  bool is_zero() const { return odd_ == 0; }
  bool is_integer() const { return odd_ == 0 || exp_ >= 0; }

  friend Dyadic operator-(const Dyadic& a) { return Dyadic(-a.odd_, a.exp_); }
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int e = std::min(a.exp_, b.exp_);
    return Dyadic((a.odd_ << (a.exp_ - e)) + (b.odd_ << (b.exp_ - e)), e);
  }
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    if (a.is_zero() || b.is_zero()) return Dyadic();
    return Dyadic(a.odd_ * b.odd_, a.exp_ + b.exp_);
  }
  Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
  Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }
  Dyadic& operator*=(const Dyadic& o) { return *this = *this * o; }
  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.odd_ == b.odd_ && a.exp_ == b.exp_;
  }
  friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }

  std::string str() const {
    if (is_zero()) return "0";
    if (exp_ >= 0) return Int(odd_ << exp_).str();
    return odd_.str() + "/" + Int(Int(1) << -exp_).str();
  }

 private:
  void normalize() {
    if (odd_ == 0) {
      exp_ = 0;
      return;
    }
    while ((odd_ & 1) == 0) {
      odd_ >>= 1;
      ++exp_;
    }
  }

  Int odd_;
  int exp_;
};

// Exact division; returns false (leaving *q untouched) when the quotient is
// not in the domain.
inline bool try_divide(const Int& a, const Int& b, Int* q) {
  if (b == 0) return false;
  Int quot = a / b;
  if (quot * b != a) return false;
  *q = quot;
  return true;
}
inline bool try_divide(const Rat& a, const Rat& b, Rat* q) {
  if (b == 0) return false;
  *q = a / b;
  return true;
}
inline bool try_divide(const Dyadic& a, const Dyadic& b, Dyadic* q) {
  if (b.is_zero()) return false;
  if (a.is_zero()) {
    *q = Dyadic();
    return true;
  }
  Int odd;
  if (!try_divide(a.odd_part(), b.odd_part(), &odd)) return false;
  *q = Dyadic(odd, a.exponent() - b.exponent());
  return true;
}

inline std::string scalar_str(const Int& v) { return v.str(); }
inline std::string scalar_str(const Dyadic& v) { return v.str(); }
inline std::string scalar_str(const Rat& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

template <class S>
S scalar_from_int(const Int& v) {
  return S(v);
}

template <class S>
bool scalar_is_zero(const S& v) {
  return v == S(0);
}
inline bool scalar_is_zero(const Dyadic& v) { return v.is_zero(); }

template <class S>
struct domain_of;
template <>
struct domain_of<Int> {
  static constexpr Domain value = Domain::integer;
};
template <>
struct domain_of<Dyadic> {
  static constexpr Domain value = Domain::dyadic;
};
template <>
struct domain_of<Rat> {
  static constexpr Domain value = Domain::rational;
};

}  // namespace spinnil
