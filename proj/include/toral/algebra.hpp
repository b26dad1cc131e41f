#pragma once

// Exact arithmetic on 2x2 integer matrices: products and powers, the
// (trace, determinant, discriminant, mgcd) fingerprint, eigenvalue structure,
// minimal polynomial and finite-order detection.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

namespace toral {

using Integer = mpz_class;

/// Row-major integer matrix [[alpha, beta], [gamma, delta]].
struct IntMatrix2 {
  Integer alpha{0}, beta{0}, gamma{0}, delta{0};

  IntMatrix2() = default;
  IntMatrix2(Integer a, Integer b, Integer c, Integer d)
      : alpha(std::move(a)), beta(std::move(b)), gamma(std::move(c)), delta(std::move(d)) {}
  IntMatrix2(long a, long b, long c, long d) : alpha(a), beta(b), gamma(c), delta(d) {}

  static IntMatrix2 identity() { return {1L, 0L, 0L, 1L}; }
  static IntMatrix2 scalar(const Integer& a) { return {a, Integer(0), Integer(0), a}; }

  Integer trace() const { return alpha + delta; }
  Integer det() const { return alpha * delta - beta * gamma; }
  bool is_scalar() const { return beta == 0 && gamma == 0 && alpha == delta; }

  friend bool operator==(const IntMatrix2& x, const IntMatrix2& y) {
    return x.alpha == y.alpha && x.beta == y.beta && x.gamma == y.gamma && x.delta == y.delta;
  }
  friend bool operator!=(const IntMatrix2& x, const IntMatrix2& y) { return !(x == y); }

  /// "[[a, b], [c, d]]"
  std::string str() const;
};

IntMatrix2 mat_mul(const IntMatrix2& a, const IntMatrix2& b);
IntMatrix2 mat_pow(IntMatrix2 a, std::uint64_t n);

struct Invariants {
  Integer t;      // trace
  Integer d;      // determinant
  Integer delta;  // discriminant t^2 - 4d
  Integer g;      // mgcd = gcd(beta, gamma, delta - alpha), 0 for scalar matrices

  friend bool operator==(const Invariants& x, const Invariants& y) {
    return x.t == y.t && x.d == y.d && x.delta == y.delta && x.g == y.g;
  }
};

Invariants invariants(const IntMatrix2& a);

/// gcd over integers with gcd(0, 0) = 0; always nonnegative.
Integer gcd(const Integer& a, const Integer& b);

/// Exact square root if `n` is a perfect square (n >= 0).
std::optional<Integer> exact_sqrt(const Integer& n);

// Eigenvalue structure, decided by the sign and squareness of the discriminant.
struct ComplexPair {
  Integer t, d;
  friend bool operator==(const ComplexPair& x, const ComplexPair& y) { return x.t == y.t && x.d == y.d; }
};
struct IntegerPair {
  Integer a, b;  // a <= b
  friend bool operator==(const IntegerPair& x, const IntegerPair& y) { return x.a == y.a && x.b == y.b; }
};
struct RealQuadratic {
  Integer t, d, delta;
  friend bool operator==(const RealQuadratic& x, const RealQuadratic& y) {
    return x.t == y.t && x.d == y.d && x.delta == y.delta;
  }
};
using EigenStructure = std::variant<ComplexPair, IntegerPair, RealQuadratic>;

EigenStructure eigen_classify(const IntMatrix2& a);

/// True if the eigen structure has `value` as an (integer) eigenvalue.
bool has_integer_eigenvalue(const EigenStructure& e, const Integer& value);

/// x - a (scalar matrices only).
struct LinearPoly {
  Integer a;
  friend bool operator==(const LinearPoly& x, const LinearPoly& y) { return x.a == y.a; }
};
/// The characteristic polynomial x^2 - t x + d.
struct CharPoly {
  Integer t, d;
  friend bool operator==(const CharPoly& x, const CharPoly& y) { return x.t == y.t && x.d == y.d; }
};
using MinimalPoly = std::variant<LinearPoly, CharPoly>;

MinimalPoly minimal_poly(const IntMatrix2& a);

/// "x-1", "x+2", "x", "x^2-3x+1", "x^2" ...
std::string poly_string(const MinimalPoly& mu);

/// Least k in {1, 2, 3, 4, 6} with A^k = id; these are the only finite
/// orders of 2x2 integer matrices.
std::optional<int> finite_order(const IntMatrix2& a);

inline bool is_automorphism(const IntMatrix2& a) {
  const Integer d = a.det();
  return d == 1 || d == -1;
}

}  // namespace toral
