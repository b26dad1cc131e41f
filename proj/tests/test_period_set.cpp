#include "toral/period_set.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace toral;
using Base = PeriodSet::Base;

TEST_CASE("membership") {
  CHECK_FALSE(PeriodSet::all_except({2}).contains(2));
  CHECK(PeriodSet::all_except({2}).contains(3));
  CHECK(PeriodSet(Base::Evens, {1}).contains(6));
  CHECK(PeriodSet(Base::Evens, {1}).contains(1));
  CHECK_FALSE(PeriodSet(Base::Evens, {1}).contains(3));
  CHECK_FALSE(PeriodSet::odds().contains(4));
  CHECK_FALSE(PeriodSet::all().contains(0));
}

TEST_CASE("truncate") {
  CHECK(PeriodSet::all().truncate(4) == PeriodWindow{1, 2, 3, 4});
  CHECK(PeriodSet::all_except({2, 3}).truncate(5) == PeriodWindow{1, 4, 5});
  CHECK(PeriodSet::empty().truncate(9).empty());
}

TEST_CASE("normalization makes equality structural") {
  const PeriodSet x(Base::Evens, {1, 4, 7}, {5, 6, 7});
  CHECK(x.added() == PeriodWindow{1});   // 4 is already even, 7 is removed
  CHECK(x.removed() == PeriodWindow{6}); // 5 is not even, so nothing to remove
  CHECK(x == PeriodSet(Base::Evens, {1}, {6}));
  CHECK(PeriodSet(Base::All, {3}) == PeriodSet::all());
  CHECK(PeriodSet(Base::Odds, {}, {2}) == PeriodSet::odds());
  CHECK_THROWS_AS(PeriodSet(Base::All, {0}), std::invalid_argument);
}

TEST_CASE("notation") {
  CHECK(PeriodSet::all().str() == "N");
  CHECK(PeriodSet::all_except({2, 3}).str() == "N\\{2,3}");
  CHECK(PeriodSet(Base::Evens, {1}).str() == "2N∪{1}");
  CHECK(PeriodSet::odds().str() == "2N−1");
  CHECK(PeriodSet::empty().str() == "∅");
  CHECK(PeriodSet::finite({1, 2, 4}).str() == "{1,2,4}");
}

TEST_CASE("base names round-trip") {
  for (Base b : {Base::Empty, Base::All, Base::Odds, Base::Evens}) CHECK(parse_base(base_name(b)) == b);
  CHECK_THROWS_AS(parse_base("primes"), std::invalid_argument);
}

namespace {

PeriodSet random_set(std::mt19937& rng) {
  std::uniform_int_distribution<int> base(0, 3), size(0, 4), elem(1, 20);
  PeriodWindow add, remove;
  for (int i = size(rng); i > 0; --i) add.insert(elem(rng));
  for (int i = size(rng); i > 0; --i) remove.insert(elem(rng));
  return PeriodSet(static_cast<Base>(base(rng)), add, remove);
}

bool raw_base(Base b, Period k) {
  switch (b) {
    case Base::Empty: return false;
    case Base::All: return true;
    case Base::Odds: return k % 2 == 1;
    case Base::Evens: return k % 2 == 0;
  }
  return false;
}

}  // namespace

TEST_CASE("property: normalized form matches raw semantics, union is pointwise") {
  std::mt19937 rng(20260514);
  std::uniform_int_distribution<int> base(0, 3), size(0, 4), elem(1, 20);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto b = static_cast<Base>(base(rng));
    PeriodWindow add, remove;
    for (int i = size(rng); i > 0; --i) add.insert(elem(rng));
    for (int i = size(rng); i > 0; --i) remove.insert(elem(rng));
    const PeriodSet s(b, add, remove);
    for (Period k = 1; k <= 40; ++k) {
      const bool raw = (raw_base(b, k) || add.contains(k)) && !remove.contains(k);
      CHECK(s.contains(k) == raw);
    }
    for (Period k : s.added()) CHECK_FALSE(raw_base(s.base(), k));
    for (Period k : s.removed()) CHECK(raw_base(s.base(), k));

    const PeriodSet t = random_set(rng);
    const PeriodSet u = unite(s, t);
    for (Period k = 1; k <= 40; ++k) CHECK(u.contains(k) == (s.contains(k) || t.contains(k)));
    // Corrections live below 21, so a window of 40 decides equality.
    CHECK((s == t) == (s.base() == t.base() && s.truncate(40) == t.truncate(40)));
  }
}
