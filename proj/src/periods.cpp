#include "toral/periods.hpp"

#include <stdexcept>

namespace toral {

UnityPowerSet UnityPowerSet::multiples_of(int k) {
  if (k != 2 && k != 3 && k != 4 && k != 6) {
    throw std::invalid_argument("unit-root orders of 2x2 integer matrices are 2, 3, 4 or 6");
  }
  return UnityPowerSet(Kind::MultiplesOf, k);
}

bool UnityPowerSet::contains(Period n) const {
  switch (kind_) {
    case Kind::None: return false;
    case Kind::All: return n >= 1;
    case Kind::MultiplesOf: return n >= 1 && n % static_cast<Period>(step_) == 0;
  }
  return false;
}

std::string UnityPowerSet::str() const {
  switch (kind_) {
    case Kind::None: return "∅";
    case Kind::All: return "N";
    case Kind::MultiplesOf: return std::to_string(step_) + "N";
  }
  return "";
}

UnityPowerSet unity_power_set(const EigenStructure& e, const Integer& t, const Integer& d) {
  if (has_integer_eigenvalue(e, Integer(1))) return UnityPowerSet::all();
  if (has_integer_eigenvalue(e, Integer(-1))) return UnityPowerSet::multiples_of(2);
  if (std::holds_alternative<ComplexPair>(e) && d == 1) {
    // Complex pairs on the unit circle: primitive cube, fourth and sixth roots.
    if (t == -1) return UnityPowerSet::multiples_of(3);
    if (t == 0) return UnityPowerSet::multiples_of(4);
    if (t == 1) return UnityPowerSet::multiples_of(6);
  }
  return UnityPowerSet::none();
}

PeriodSet ps_minus_unity(const PeriodSet& per, const UnityPowerSet& u) {
  using Base = PeriodSet::Base;
  if (u.kind() == UnityPowerSet::Kind::None) return per;
  if (u.kind() == UnityPowerSet::Kind::All) return PeriodSet::empty();

  const auto step = static_cast<Period>(u.step());
  Base base = per.base();
  switch (per.base()) {
    case Base::Empty: break;
    case Base::Evens:
      if (step != 2) throw std::domain_error("2N minus " + u.str() + " is not representable");
      base = Base::Empty;
      break;
    case Base::Odds:
      // Odd numbers are never multiples of an even step.
      if (step % 2 != 0) throw std::domain_error("2N−1 minus " + u.str() + " is not representable");
      break;
    case Base::All:
      if (step != 2) throw std::domain_error("N minus " + u.str() + " is not representable");
      base = Base::Odds;
      break;
  }
  PeriodWindow add, remove;
  for (Period k : per.added()) {
    if (k % step != 0) add.insert(k);
  }
  for (Period k : per.removed()) {
    if (k % step != 0) remove.insert(k);
  }
  return PeriodSet(base, std::move(add), std::move(remove));
}

PeriodSet p_set(const Integer& a) {
  if (a == 0) return PeriodSet::empty();
  if (a == 1) return PeriodSet::finite({1});
  if (a == -1) return PeriodSet::finite({1, 2});
  if (a == -2) return PeriodSet::all_except({2});
  if (a == 2) return PeriodSet::all_except({1});
  return PeriodSet::all();
}

CirclePeriods classify_circle(const Integer& deg) {
  if (deg == 1) return {PeriodSet::empty(), PeriodSet::finite({1})};
  if (deg == 0) return {PeriodSet::finite({1}), PeriodSet::finite({1})};
  if (deg == -1) return {PeriodSet::finite({1}), PeriodSet::finite({1, 2})};
  if (deg == -2) return {PeriodSet::all_except({2}), PeriodSet::all_except({2})};
  return {PeriodSet::all(), PeriodSet::all()};
}

const std::array<TorusRow, kTorusRows>& torus_table() {
  using PS = PeriodSet;
  static const std::array<TorusRow, kTorusRows> rows = {{
      {1, "1", "(2,1)", "x-1", PS::empty(), PS::finite({1}), "y"},
      {2, "1", "(2,1)", "χ_A", PS::empty(), PS::all(), "y"},
      {3, "-1", "(-2,1)", "x+1", PS::finite({1}), PS::finite({1, 2}), "y"},
      {4, "-1", "(-2,1)", "χ_A", PS::finite({1}), PS(PS::Base::Evens, {1}), "y"},
      {5, "±1", "(0,-1)", "χ_A", PS::empty(), PS::finite({1, 2}), "y"},
      {6, "e^{2πi/3}, e^{-2πi/3}", "(-1,1)", "χ_A", PS::finite({1}), PS::finite({1, 3}), "y"},
      {7, "±i", "(0,1)", "χ_A", PS::finite({1, 2}), PS::finite({1, 2, 4}), "y"},
      {8, "e^{πi/3}, e^{-πi/3}", "(1,1)", "χ_A", PS::finite({1, 2, 3}), PS::finite({1, 2, 3, 6}), "y"},
      {9, "0", "(0,0)", "x^2 or x", PS::finite({1}), PS::finite({1}), "n"},
      {10, "0, 1", "(1,0)", "x^2-x", PS::empty(), PS::finite({1}), "n"},
      {11, "0, -1", "(-1,0)", "χ_A", PS::finite({1}), PS::finite({1, 2}), "n"},
      {12, "∉R", "(-2,2)", "χ_A", PS::all_except({2, 3}), PS::all_except({2, 3}), "n"},
      {13, "∉R", "(-1,2)", "χ_A", PS::all_except({3}), PS::all_except({3}), "n"},
      {14, "∉R", "(0,2)", "χ_A", PS::all_except({4}), PS::all_except({4}), "n"},
      {15, "∉R", "none of the above", "χ_A", PS::all(), PS::all(), "y/n"},
      {16, "real, both ≠ ±1", "t+d ∉ {0,-2}", "χ_A or x-a, a ∈ Z\\E", PS::all(), PS::all(), "y/n"},
      {17, "real", "t+d ∈ {0,-2}, (t,d) ≠ (0,0)", "χ_A or x+2", PS::all_except({2}),
       PS::all_except({2}), "y/n"},
      {18, "-1, -d", "t+d = -1, d ∈ Z\\{-1,0,1}", "χ_A", PS::odds(), PS::all(), "n"},
      {19, "1, -2", "(-1,-2)", "χ_A", PS::empty(), PS::all_except({2}), "n"},
      {20, "1, d", "t-d = 1, (t,d) ≠ (-1,-2)", "χ_A", PS::empty(), PS::all(), "n"},
  }};
  return rows;
}

const TorusRow& torus_row(int row) {
  if (row < 1 || row > kTorusRows) throw std::out_of_range("torus table rows are numbered 1..20");
  return torus_table()[static_cast<std::size_t>(row - 1)];
}

namespace {

bool is_pair(const Integer& t, const Integer& d, long tt, long dd) { return t == tt && d == dd; }

int torus_row_for(const IntMatrix2& a, const Integer& t, const Integer& d, const Integer& delta) {
  const Integer t_plus_d = t + d;
  const bool real_catch_all_17 = t_plus_d == 0 || t_plus_d == -2;

  if (delta < 0) {
    if (is_pair(t, d, -1, 1)) return 6;
    if (is_pair(t, d, 0, 1)) return 7;
    if (is_pair(t, d, 1, 1)) return 8;
    if (is_pair(t, d, -2, 2)) return 12;
    if (is_pair(t, d, -1, 2)) return 13;
    if (is_pair(t, d, 0, 2)) return 14;
    return 15;
  }
  if (exact_sqrt(delta)) {
    if (is_pair(t, d, 2, 1)) return a.is_scalar() ? 1 : 2;
    if (is_pair(t, d, -2, 1)) return a.is_scalar() ? 3 : 4;
    if (is_pair(t, d, 0, -1)) return 5;
    if (is_pair(t, d, 0, 0)) return 9;
    if (is_pair(t, d, 1, 0)) return 10;
    if (is_pair(t, d, -1, 0)) return 11;
    // chi(-1) = 1 + t + d and chi(1) = 1 - t + d.
    if (t_plus_d == -1) return 18;
    if (t - d == 1) return is_pair(t, d, -1, -2) ? 19 : 20;
    return real_catch_all_17 ? 17 : 16;
  }
  return real_catch_all_17 ? 17 : 16;
}

}  // namespace

Classification classify_torus(const IntMatrix2& a) {
  const Invariants inv = invariants(a);
  Classification c;
  c.row = torus_row_for(a, inv.t, inv.d, inv.delta);
  const TorusRow& row = torus_row(c.row);
  c.per = row.per;
  c.mper = row.mper;
  c.eigen = eigen_classify(a);
  c.mu = minimal_poly(a);
  c.automorphism = is_automorphism(a);

  const PeriodSet derived = ps_minus_unity(c.per, unity_power_set(c.eigen, inv.t, inv.d));
  if (derived != c.mper) {
    throw std::logic_error("row " + std::to_string(c.row) + ": MPer " + c.mper.str() +
                           " disagrees with Per minus unit-root powers " + derived.str());
  }
  return c;
}

}  // namespace toral
