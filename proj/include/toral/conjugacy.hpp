#pragma once

// Local conjugacy of 2x2 integer matrices. Trace, determinant and mgcd form a
// complete invariant for simultaneous conjugacy of all reductions mod n; the
// exhaustive search over GL(2, Z/nZ) is the independent check.

#include "toral/algebra.hpp"

#include <compare>
#include <cstdint>
#include <optional>

namespace toral {

struct ConjugacyTriple {
  Integer t, d, g;

  friend bool operator==(const ConjugacyTriple& x, const ConjugacyTriple& y) {
    return x.t == y.t && x.d == y.d && x.g == y.g;
  }
  friend bool operator<(const ConjugacyTriple& x, const ConjugacyTriple& y) {
    if (x.t != y.t) return x.t < y.t;
    if (x.d != y.d) return x.d < y.d;
    return x.g < y.g;
  }
};

ConjugacyTriple triple(const IntMatrix2& a);

inline bool locally_conjugate(const IntMatrix2& a, const IntMatrix2& b) {
  return triple(a) == triple(b);
}

/// [[a, g], [0, b]] for integer eigenvalues a <= b and mgcd g | (b - a).
/// Throws std::invalid_argument otherwise (g = 0 is allowed only for a = b).
IntMatrix2 normal_form(const Integer& a, const Integer& b, const Integer& g);

/// Some P with det(P) a unit mod n and P A = B P (mod n), entries in [0, n).
/// The identity is tried first; otherwise all n^4 candidates are searched.
std::optional<IntMatrix2> conjugate_mod_n(const IntMatrix2& a, const IntMatrix2& b, std::uint32_t n);

/// Checks P A = B P (mod n) with det(P) a unit mod n.
bool is_conjugator_mod_n(const IntMatrix2& p, const IntMatrix2& a, const IntMatrix2& b, std::uint32_t n);

}  // namespace toral
