#pragma once

#include <stdexcept>
#include <string>

namespace spinnil {

/// Grading variant: `spin` is the skew-polynomial (Z x Z_2 graded) theory,
/// `even` the classical commutative-polynomial counterpart.
enum class Variant { spin, even };

/// Classical Weyl type.  Rank n of type A means the symmetric group S_n
/// acting on n variables; B and D are the corresponding signed-permutation
/// groups (D requires n >= 2).
enum class WeylType { A, B, D };

inline const char* variant_name(Variant v) { return v == Variant::spin ? "spin" : "even"; }
inline const char* type_name(WeylType t) {
  switch (t) {
    case WeylType::A: return "a";
    case WeylType::B: return "b";
    default: return "d";
  }
}

/// Number of simple generators for (type, rank).
inline int generator_count(WeylType t, int n) { return t == WeylType::A ? n - 1 : n; }

inline void check_rank(WeylType t, int n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  if (t == WeylType::D && n < 2) throw std::invalid_argument("type D requires rank >= 2");
}

struct SpinnilError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An exact division left the scalar domain (decompose over Integer for type D, etc.).
struct DomainDivisionError : SpinnilError {
  using SpinnilError::SpinnilError;
};

/// pbw_decompose was handed an operator that is not in the algebra.
struct ResidualError : SpinnilError {
  using SpinnilError::SpinnilError;
};

/// express_in_elementary was handed something outside the invariant ring.
struct NotExpressibleError : SpinnilError {
  using SpinnilError::SpinnilError;
};

/// Even Demazure division (f - s(f))/alpha had a remainder; indicates a
/// convention bug, never expected on valid input.
struct DivisionNotExactError : SpinnilError {
  using SpinnilError::SpinnilError;
};

}  // namespace spinnil
