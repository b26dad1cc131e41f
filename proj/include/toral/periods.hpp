#pragma once

// Period sets of linear circle and torus endomorphisms.
//
// classify_torus walks a fixed decision tree over (trace, det, discriminant)
// and lands on exactly one of the twenty rows of the torus table. Each row
// carries its (MPer, Per) pair; MPer is re-derived from Per by removing the
// exponents n for which 1 is an eigenvalue of A^n, and the two must agree.

#include "toral/algebra.hpp"
#include "toral/period_set.hpp"

#include <array>
#include <string>

namespace toral {

/// {n in N : 1 is an eigenvalue of A^n}.
class UnityPowerSet {
 public:
  enum class Kind { None, All, MultiplesOf };

  static UnityPowerSet none() { return UnityPowerSet(Kind::None, 0); }
  static UnityPowerSet all() { return UnityPowerSet(Kind::All, 1); }
  /// k in {2, 3, 4, 6}
  static UnityPowerSet multiples_of(int k);

  Kind kind() const { return kind_; }
  int step() const { return step_; }
  bool contains(Period n) const;
  std::string str() const;

  friend bool operator==(const UnityPowerSet&, const UnityPowerSet&) = default;

 private:
  UnityPowerSet(Kind kind, int step) : kind_(kind), step_(step) {}
  Kind kind_;
  int step_;
};

UnityPowerSet unity_power_set(const EigenStructure& e, const Integer& t, const Integer& d);

/// per \ u. Throws std::domain_error when the difference has no
/// base+corrections form (never the case for classifier outputs).
PeriodSet ps_minus_unity(const PeriodSet& per, const UnityPowerSet& u);

/// The set of multiplicative orders {ord_n(a) : n >= 2, gcd(a, n) = 1};
/// empty for a = 0.
PeriodSet p_set(const Integer& a);

struct CirclePeriods {
  PeriodSet mper;
  PeriodSet per;
};

/// Period sets of x -> deg * x on the circle.
CirclePeriods classify_circle(const Integer& deg);

struct Classification {
  int row = 0;  // 1..20
  PeriodSet per;
  PeriodSet mper;
  EigenStructure eigen;
  MinimalPoly mu;
  bool automorphism = false;
};

Classification classify_torus(const IntMatrix2& a);

/// Descriptive columns of one torus table row, as printed in the
/// table. `automorphism` is the text of the table's last column.
struct TorusRow {
  int row;
  const char* eigenvalues;
  const char* trace_det;
  const char* minimal_poly;
  PeriodSet mper;
  PeriodSet per;
  const char* automorphism;
};

inline constexpr int kTorusRows = 20;

const std::array<TorusRow, kTorusRows>& torus_table();
const TorusRow& torus_row(int row);

}  // namespace toral
