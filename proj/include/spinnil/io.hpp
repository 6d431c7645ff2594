#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "spinnil/skewpoly.hpp"
#include "spinnil/weyl.hpp"

namespace spinnil {

inline std::string monomial_str(const Exponents& e) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << "x" << (i + 1);
    if (e[i] != 1) os << "^" << e[i];
  }
  return first ? "1" : os.str();
}

/// Terms emitted leading-first (descending lexicographic exponent order).
template <class S, bool Skew>
std::string poly_str(const BasicPoly<S, Skew>& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    std::string cs = scalar_str(it->second);
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs.erase(0, 1);
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    std::string ms = monomial_str(it->first);
    if (ms == "1") {
      os << cs;
    } else if (cs == "1") {
      os << ms;
    } else {
      os << cs << "*" << ms;
    }
  }
  return os.str();
}

inline Int scalar_parse_int(const std::string& s) { return Int(s); }

template <class S>
S scalar_parse(const std::string& s) {
  if constexpr (std::is_same_v<S, Int>) {
    return Int(s);
  } else if constexpr (std::is_same_v<S, Rat>) {
    return Rat(s);
  } else {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Dyadic(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den <= 0) throw std::invalid_argument("bad dyadic denominator");
    int k = 0;
    while (den % 2 == 0) {
      den /= 2;
      ++k;
    }
    if (den != 1) throw std::invalid_argument("dyadic denominator must be a power of 2");
    return Dyadic(num, -k);
  }
}

namespace detail {

struct PolyLexer {
  std::string s;
  std::size_t pos = 0;
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  std::string number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
    if (start == pos) throw std::invalid_argument("expected number in polynomial at: " + s.substr(start));
    return s.substr(start, pos - start);
  }
  int integer() {
    std::string n = number();
    if (n.find('/') != std::string::npos) throw std::invalid_argument("expected integer");
    return std::stoi(n);
  }
};

}  // namespace detail

/// Parse "3*x1^2*x2 - x3".  Factors multiply in the written order, so for
/// the skew ring "x2*x1" yields -x1*x2.
template <class S, bool Skew>
BasicPoly<S, Skew> parse_poly(const std::string& text, int rank) {
  detail::PolyLexer lx{text};
  using Poly = BasicPoly<S, Skew>;
  Poly out = Poly::zero(rank);
  bool expect_term = true;
  int sign = 1;
  while (true) {
    char c = lx.peek();
    if (c == '\0') break;
    if (c == '+') {
      lx.eat('+');
      sign = 1;
      expect_term = true;
      continue;
    }
    if (c == '-') {
      lx.eat('-');
      sign = expect_term ? -sign : -1;
      expect_term = true;
      continue;
    }
    // one term: optional scalar, then optional variable factors
    S coeff = scalar_from_int<S>(Int(sign));
    bool have_factor = false;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      coeff = coeff * scalar_parse<S>(lx.number());
      have_factor = true;
    }
    Poly term = Poly::constant(rank, coeff);
    while (true) {
      char p = lx.peek();
      if (p == '*') {
        lx.eat('*');
        p = lx.peek();
      } else if (have_factor && p != 'x') {
        break;
      }
      if (p != 'x') {
        if (!have_factor) throw std::invalid_argument("expected term in polynomial");
        break;
      }
      lx.eat('x');
      int var = lx.integer();
      if (var < 1 || var > rank) throw std::invalid_argument("variable index out of range");
      int exp = 1;
      if (lx.peek() == '^') {
        lx.eat('^');
        exp = lx.integer();
      }
      for (int i = 0; i < exp; ++i) term = term * Poly::variable(rank, var);
      have_factor = true;
    }
    out += term;
    sign = 1;
    expect_term = false;
  }
  return out;
}

inline std::string window_str(const SignedPerm& w) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < w.rank(); ++i) {
    if (i) os << ",";
    os << w.window[i];
  }
  os << "]";
  return os.str();
}

inline SignedPerm parse_window(const std::string& text, WeylType t) {
  std::vector<int> entries;
  std::string cur;
  for (char c : text) {
    if (c == '[' || c == ']' || c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) {
        entries.push_back(std::stoi(cur));
        cur.clear();
      }
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) entries.push_back(std::stoi(cur));
  SignedPerm w{t, entries};
  validate(w);
  return w;
}

inline std::string word_str(const std::vector<int>& word) {
  std::ostringstream os;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) os << " ";
    os << "s" << word[i];
  }
  return os.str();
}

/// Accepts "s1 s2 s1" or "1 2 1".
inline std::vector<int> parse_word(const std::string& text) {
  std::vector<int> word;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      word.push_back(std::stoi(cur));
      cur.clear();
    }
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else if (c == 's') {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return word;
}

}  // namespace spinnil
