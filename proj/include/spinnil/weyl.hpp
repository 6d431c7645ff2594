#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "spinnil/common.hpp"

namespace spinnil {

/// Signed permutation in window notation: window[i-1] = w(i), a signed
/// integer with |w| a permutation of 1..n.  Type A windows are all positive;
/// type D windows have an even number of negative entries.
struct SignedPerm {
  WeylType type;
  std::vector<int> window;

  int rank() const { return static_cast<int>(window.size()); }
  int operator()(int i) const {  // signed action, defined for i in [-n, -1] u [1, n]
    if (i > 0) return window[i - 1];
    return -window[-i - 1];
  }
  friend bool operator==(const SignedPerm& a, const SignedPerm& b) {
    return a.type == b.type && a.window == b.window;
  }
  friend bool operator!=(const SignedPerm& a, const SignedPerm& b) { return !(a == b); }
  friend bool operator<(const SignedPerm& a, const SignedPerm& b) { return a.window < b.window; }
};

inline void validate(const SignedPerm& w) {
  int n = w.rank();
  check_rank(w.type, n);
  std::vector<bool> seen(n, false);
  int negatives = 0;
  for (int v : w.window) {
    int a = std::abs(v);
    if (a < 1 || a > n || seen[a - 1]) throw std::invalid_argument("window is not a signed permutation");
    seen[a - 1] = true;
    if (v < 0) ++negatives;
  }
  if (w.type == WeylType::A && negatives > 0)
    throw std::invalid_argument("type A window must be positive");
  if (w.type == WeylType::D && negatives % 2 != 0)
    throw std::invalid_argument("type D window needs an even number of sign changes");
}

inline SignedPerm weyl_identity(WeylType t, int n) {
  check_rank(t, n);
  SignedPerm w{t, std::vector<int>(n)};
  for (int i = 0; i < n; ++i) w.window[i] = i + 1;
  return w;
}

/// Simple generator: index 1..n-1 swaps adjacent positions; index n is the
/// sign flip at position n (type B) or the signed swap of the last two
/// positions (type D).
inline SignedPerm weyl_generator(WeylType t, int n, int index) {
  if (index < 1 || index > generator_count(t, n))
    throw std::out_of_range("generator index out of range");
  SignedPerm w = weyl_identity(t, n);
  if (t != WeylType::A && index == n) {
    if (t == WeylType::B) {
      w.window[n - 1] = -n;
    } else {
      w.window[n - 2] = -n;
      w.window[n - 1] = -(n - 1);
    }
  } else {
    std::swap(w.window[index - 1], w.window[index]);
  }
  return w;
}

/// (u v)(i) = u(v(i)) with signs transported.
inline SignedPerm weyl_compose(const SignedPerm& u, const SignedPerm& v) {
  if (u.type != v.type || u.rank() != v.rank())
    throw std::invalid_argument("type/rank mismatch in composition");
  SignedPerm w{u.type, std::vector<int>(u.rank())};
  for (int i = 1; i <= u.rank(); ++i) w.window[i - 1] = u(v(i));
  return w;
}

inline SignedPerm weyl_inverse(const SignedPerm& w) {
  SignedPerm v{w.type, std::vector<int>(w.rank())};
  for (int i = 1; i <= w.rank(); ++i) {
    int j = w.window[i - 1];
    v.window[std::abs(j) - 1] = j > 0 ? i : -i;
  }
  return v;
}

/// Coxeter length, counting positive roots sent negative:
/// e_i - e_j (all types), e_i + e_j (B and D), e_i (B only).
inline int weyl_length(const SignedPerm& w) {
  int n = w.rank();
  int len = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      int a = w(i), b = w(j);
      // image of e_i - e_j negative?
      bool minus_neg = (a > 0 && b > 0) ? a > b : (a < 0 && b > 0) ? true
                       : (a < 0 && b < 0)                          ? -b > -a
                                                                   : false;
      if (minus_neg) ++len;
      if (w.type != WeylType::A) {
        // image of e_i + e_j negative?
        bool plus_neg = (a < 0 && b < 0) ? true
                        : (a > 0 && b < 0) ? a > -b
                        : (a < 0 && b > 0) ? b > -a
                                           : false;
        if (plus_neg) ++len;
      }
    }
    if (w.type == WeylType::B && w(i) < 0) ++len;
  }
  return len;
}

inline SignedPerm weyl_longest(WeylType t, int n) {
  check_rank(t, n);
  SignedPerm w = weyl_identity(t, n);
  switch (t) {
    case WeylType::A:
      std::reverse(w.window.begin(), w.window.end());
      break;
    case WeylType::B:
      for (int& v : w.window) v = -v;
      break;
    case WeylType::D:
      for (int i = 0; i < (n % 2 == 0 ? n : n - 1); ++i) w.window[i] = -w.window[i];
      break;
  }
  return w;
}

/// Fixed reduced word of the longest element.  For B: the factorization
/// s_a..s_{n-1} s_n s_{n-1}..s_a for a = 1..n-1, then s_n.  For D: the
/// factorization s_a..s_{n-2} s_n s_{n-1} s_{n-2}..s_a for a = 1..n-2, then
/// s_{n-1} s_n.  For A the descent-stripping word is used.
inline std::vector<int> longest_word(WeylType t, int n);

inline std::vector<int> canonical_word(SignedPerm w) {
  validate(w);
  int n = w.rank();
  if (w == weyl_longest(w.type, n) && w.type != WeylType::A) return longest_word(w.type, n);
  std::vector<int> rev;
  int len = weyl_length(w);
  while (len > 0) {
    for (int s = 1; s <= generator_count(w.type, n); ++s) {
      SignedPerm ws = weyl_compose(w, weyl_generator(w.type, n, s));
      int l = weyl_length(ws);
      if (l < len) {
        rev.push_back(s);
        w = std::move(ws);
        len = l;
        break;
      }
    }
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

inline std::vector<int> longest_word(WeylType t, int n) {
  check_rank(t, n);
  std::vector<int> word;
  switch (t) {
    case WeylType::A:
      return canonical_word(weyl_longest(t, n));
    case WeylType::B:
      for (int a = 1; a <= n - 1; ++a) {
        for (int i = a; i <= n; ++i) word.push_back(i);
        for (int i = n - 1; i >= a; --i) word.push_back(i);
      }
      word.push_back(n);
      return word;
    case WeylType::D:
      for (int a = 1; a <= n - 2; ++a) {
        for (int i = a; i <= n - 2; ++i) word.push_back(i);
        word.push_back(n);
        for (int i = n - 1; i >= a; --i) word.push_back(i);
      }
      word.push_back(n - 1);
      word.push_back(n);
      return word;
  }
  return word;
}

inline SignedPerm evaluate_word(WeylType t, int n, const std::vector<int>& letters) {
  SignedPerm w = weyl_identity(t, n);
  for (int s : letters) w = weyl_compose(w, weyl_generator(t, n, s));
  return w;
}

/// Full Weyl group with the canonical element order:
/// sorted by (length, canonical word lexicographically).
class WeylGroup {
 public:
  static std::shared_ptr<const WeylGroup> get(WeylType t, int n);

  WeylType type() const { return type_; }
  int rank() const { return rank_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<SignedPerm>& elements() const { return elements_; }
  const SignedPerm& element(int idx) const { return elements_[idx]; }
  int length(int idx) const { return lengths_[idx]; }
  const std::vector<int>& word(int idx) const { return words_[idx]; }
  int longest_index() const { return size() - 1; }
  int longest_length() const { return lengths_.back(); }

  int index_of(const SignedPerm& w) const {
    auto it = index_.find(w.window);
    if (it == index_.end()) throw std::invalid_argument("element not in group");
    return it->second;
  }

 private:
  WeylGroup(WeylType t, int n) : type_(t), rank_(n) {
    std::vector<SignedPerm> gens;
    for (int s = 1; s <= generator_count(t, n); ++s) gens.push_back(weyl_generator(t, n, s));
    std::map<std::vector<int>, bool> seen;
    std::vector<SignedPerm> queue{weyl_identity(t, n)};
    seen[queue[0].window] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      SignedPerm cur = queue[head];
      for (const auto& g : gens) {
        SignedPerm next = weyl_compose(cur, g);
        if (!seen.count(next.window)) {
          seen[next.window] = true;
          queue.push_back(next);
        }
      }
    }
    struct Key {
      int len;
      std::vector<int> word;
      int pos;
    };
    std::vector<Key> keys;
    keys.reserve(queue.size());
    for (std::size_t i = 0; i < queue.size(); ++i)
      keys.push_back({weyl_length(queue[i]), canonical_word(queue[i]), static_cast<int>(i)});
    std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
      return a.len != b.len ? a.len < b.len : a.word < b.word;
    });
    for (const auto& k : keys) {
      index_[queue[k.pos].window] = static_cast<int>(elements_.size());
      elements_.push_back(queue[k.pos]);
      lengths_.push_back(k.len);
      words_.push_back(k.word);
    }
  }

  WeylType type_;
  int rank_;
  std::vector<SignedPerm> elements_;
  std::vector<int> lengths_;
  std::vector<std::vector<int>> words_;
  std::map<std::vector<int>, int> index_;
};

inline std::shared_ptr<const WeylGroup> WeylGroup::get(WeylType t, int n) {
  check_rank(t, n);
  static std::mutex mu;
  static std::map<std::pair<WeylType, int>, std::shared_ptr<const WeylGroup>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{t, n}];
  if (!slot) slot = std::shared_ptr<const WeylGroup>(new WeylGroup(t, n));
  return slot;
}

}  // namespace spinnil
