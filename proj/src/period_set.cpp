#include "toral/period_set.hpp"

#include <sstream>
#include <stdexcept>

namespace toral {

namespace {

std::string braces(const PeriodWindow& elems) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (Period k : elems) {
    if (!first) out << ',';
    out << k;
    first = false;
  }
  out << '}';
  return out.str();
}

PeriodSet::Base union_base(PeriodSet::Base x, PeriodSet::Base y) {
  using Base = PeriodSet::Base;
  if (x == y) return x;
  if (x == Base::Empty) return y;
  if (y == Base::Empty) return x;
  // Two distinct nonempty bases always cover N (Odds ∪ Evens, or one is All).
  return Base::All;
}

}  // namespace

bool PeriodSet::base_contains(Base base, Period k) {
  switch (base) {
    case Base::Empty: return false;
    case Base::All: return true;
    case Base::Odds: return k % 2 == 1;
    case Base::Evens: return k % 2 == 0;
  }
  return false;
}

PeriodSet::PeriodSet(Base base, PeriodWindow add, PeriodWindow remove) : base_(base) {
  if (add.contains(0) || remove.contains(0)) {
    throw std::invalid_argument("period sets contain positive integers only");
  }
  for (Period k : add) {
    if (!base_contains(base_, k) && !remove.contains(k)) add_.insert(k);
  }
  for (Period k : remove) {
    if (base_contains(base_, k)) remove_.insert(k);
  }
}

bool PeriodSet::contains(Period k) const {
  if (k == 0) return false;
  return (base_contains(base_, k) || add_.contains(k)) && !remove_.contains(k);
}

PeriodWindow PeriodSet::truncate(Period limit) const {
  PeriodWindow out;
  for (Period k = 1; k <= limit; ++k) {
    if (contains(k)) out.insert(k);
  }
  return out;
}

std::string PeriodSet::str() const {
  std::string out;
  switch (base_) {
    case Base::Empty: return add_.empty() ? "∅" : braces(add_);
    case Base::All: out = "N"; break;
    case Base::Odds: out = "2N−1"; break;
    case Base::Evens: out = "2N"; break;
  }
  if (!add_.empty()) out += "∪" + braces(add_);
  if (!remove_.empty()) out += "\\" + braces(remove_);
  return out;
}

PeriodSet unite(const PeriodSet& x, const PeriodSet& y) {
  const PeriodSet::Base base = union_base(x.base(), y.base());
  PeriodWindow add = x.added();
  add.insert(y.added().begin(), y.added().end());
  PeriodWindow remove;
  for (const auto* removed : {&x.removed(), &y.removed()}) {
    for (Period k : *removed) {
      if (!x.contains(k) && !y.contains(k)) remove.insert(k);
    }
  }
  return PeriodSet(base, std::move(add), std::move(remove));
}

const char* base_name(PeriodSet::Base base) {
  switch (base) {
    case PeriodSet::Base::Empty: return "empty";
    case PeriodSet::Base::All: return "all";
    case PeriodSet::Base::Odds: return "odds";
    case PeriodSet::Base::Evens: return "evens";
  }
  return "empty";
}

PeriodSet::Base parse_base(const std::string& name) {
  if (name == "empty") return PeriodSet::Base::Empty;
  if (name == "all") return PeriodSet::Base::All;
  if (name == "odds") return PeriodSet::Base::Odds;
  if (name == "evens") return PeriodSet::Base::Evens;
  throw std::invalid_argument("unknown period set kind '" + name + "'");
}

}  // namespace toral
