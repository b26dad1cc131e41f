#pragma once

#include <cstdint>
#include <set>
#include <string>

namespace toral {

using Period = std::uint64_t;
using PeriodWindow = std::set<Period>;

/// A subset of N = {1, 2, 3, ...} of the form (base ∪ add) \ remove with
/// finite `add` and `remove`. The representation is normalized on
/// construction (add ∩ base = ∅, remove ⊆ base), so equality is structural.
class PeriodSet {
 public:
  enum class Base { Empty, All, Odds, Evens };

  PeriodSet() = default;
  explicit PeriodSet(Base base, PeriodWindow add = {}, PeriodWindow remove = {});

  static PeriodSet empty() { return PeriodSet(Base::Empty); }
  static PeriodSet all() { return PeriodSet(Base::All); }
  static PeriodSet odds() { return PeriodSet(Base::Odds); }
  static PeriodSet evens() { return PeriodSet(Base::Evens); }
  static PeriodSet finite(PeriodWindow elems) { return PeriodSet(Base::Empty, std::move(elems)); }
  static PeriodSet all_except(PeriodWindow removed) { return PeriodSet(Base::All, {}, std::move(removed)); }

  Base base() const { return base_; }
  const PeriodWindow& added() const { return add_; }
  const PeriodWindow& removed() const { return remove_; }

  bool is_finite() const { return base_ == Base::Empty; }
  bool contains(Period k) const;

  /// {k <= limit : contains(k)}
  PeriodWindow truncate(Period limit) const;

  /// Human notation: "∅", "{1,2}", "N", "N\{2,3}", "2N∪{1}", "2N−1".
  std::string str() const;

  friend bool operator==(const PeriodSet&, const PeriodSet&) = default;

 private:
  static bool base_contains(Base base, Period k);

  Base base_ = Base::Empty;
  PeriodWindow add_;
  PeriodWindow remove_;
};

PeriodSet unite(const PeriodSet& x, const PeriodSet& y);

/// "empty" | "all" | "odds" | "evens"
const char* base_name(PeriodSet::Base base);
PeriodSet::Base parse_base(const std::string& name);

inline bool is_subset(const PeriodWindow& sub, const PeriodWindow& super) {
  for (Period k : sub) {
    if (!super.contains(k)) return false;
  }
  return true;
}

}  // namespace toral
