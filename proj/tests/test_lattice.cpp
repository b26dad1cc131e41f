#include "support.hpp"
#include "toral/lattice.hpp"
#include "toral/nielsen.hpp"
#include "toral/periods.hpp"

#include <doctest.h>

#include <set>
#include <stdexcept>

using namespace toral;
using toral::test::from;

namespace {

std::map<long long, long long> as_oracle(const CycleStats& s) {
  std::map<long long, long long> out;
  for (auto [k, count] : s.cycles) out[static_cast<long long>(k)] = static_cast<long long>(count);
  return out;
}

}  // namespace

TEST_CASE("lattice_cycles examples") {
  CycleStats s = lattice_cycles(IntMatrix2::identity(), 5);
  CHECK(s.cycles == std::map<Period, std::uint64_t>{{1, 25}});
  CHECK(s.periodic_points == 25);

  s = lattice_cycles(IntMatrix2{0, -1, 1, -1}, 2);
  CHECK(s.cycles == std::map<Period, std::uint64_t>{{1, 1}, {3, 1}});

  s = lattice_cycles(IntMatrix2::scalar(2), 3);
  CHECK(s.cycles == std::map<Period, std::uint64_t>{{1, 1}, {2, 4}});

  // Non-invertible mod n: only the origin is periodic for the zero matrix.
  s = lattice_cycles(IntMatrix2{0, 0, 0, 0}, 7);
  CHECK(s.cycles == std::map<Period, std::uint64_t>{{1, 1}});
  CHECK(s.periodic_points == 1);

  CHECK(lattice_cycles(IntMatrix2{2, 1, 1, 1}, 1).cycles == std::map<Period, std::uint64_t>{{1, 1}});
  CHECK_THROWS_AS(lattice_cycles(IntMatrix2::identity(), 0), std::out_of_range);
  CHECK_THROWS_AS(lattice_cycles(IntMatrix2::identity(), kMaxLatticeDenominator + 1), std::out_of_range);
}

TEST_CASE("cycle histograms agree with the per-point oracle") {
  for (const oracle::M& m : oracle::scan(2)) {
    const IntMatrix2 a = from(m);
    LatticeScanner scanner;
    for (std::uint32_t n : {2U, 3U, 4U, 6U}) {
      CAPTURE(a.str());
      CAPTURE(n);
      CHECK(as_oracle(scanner.cycles(a, n)) == oracle::cycle_histogram(m, n));
    }
  }
  for (const oracle::M& m : {oracle::M{2, 1, 1, 1}, oracle::M{3, 0, 0, 3}, oracle::M{-3, -3, 1, 0}, oracle::M{1, 2, 3, 1}}) {
    for (std::uint32_t n = 2; n <= 13; ++n) {
      CHECK(as_oracle(lattice_cycles(from(m), n)) == oracle::cycle_histogram(m, n));
    }
  }
  CHECK(observed_periods(IntMatrix2{2, 1, 1, 1}, 12) == [] {
    std::set<long long> ref = oracle::periods_up_to({2, 1, 1, 1}, 12);
    return PeriodWindow(ref.begin(), ref.end());
  }());
}

TEST_CASE("invertible residues give a permutation") {
  // det a unit mod n: every point is periodic.
  const IntMatrix2 cat{2, 1, 1, 1};
  for (std::uint32_t n = 2; n <= 40; ++n) CHECK(lattice_cycles(cat, n).periodic_points == std::uint64_t{n} * n);
  const IntMatrix2 a{1, 2, 3, 1};  // det -5
  for (std::uint32_t n : {2U, 3U, 4U, 7U, 9U, 11U}) CHECK(lattice_cycles(a, n).periodic_points == std::uint64_t{n} * n);
  CHECK(lattice_cycles(a, 5).periodic_points < 25);
}

TEST_CASE("cycle representatives have the recorded least period") {
  LatticeScanner scanner;
  const oracle::M m{2, 1, 1, 1};
  for (std::uint32_t n : {7U, 10U, 17U}) {
    for (const LatticeCycle& c : scanner.cycle_list(from(m), n)) {
      CHECK(oracle::least_period(m, n, {c.x, c.y}) == static_cast<long long>(c.length));
    }
  }
}

TEST_CASE("scan_periods stops once the target is covered") {
  const IntMatrix2 rot{0, -1, 1, 0};
  PeriodScan s = scan_periods(rot, 50, PeriodWindow{1, 2, 4});
  CHECK(s.target_reached);
  CHECK(s.n_scanned == 3);
  CHECK(s.observed == PeriodWindow{1, 2, 4});

  s = scan_periods(rot, 50, PeriodWindow{1, 3});
  CHECK_FALSE(s.target_reached);
  CHECK(s.n_scanned == 50);

  s = scan_periods(rot, 10);
  CHECK(s.n_scanned == 10);
  CHECK(s.observed == PeriodWindow{1, 2, 4});
  CHECK(scan_periods(rot, 10, PeriodWindow{1}).n_scanned == 1);
}

TEST_CASE("fixed_point_count") {
  CHECK(fixed_point_count(IntMatrix2{2, 0, 0, 3}, 1) == 2);
  CHECK(fixed_point_count(IntMatrix2{2, 1, 1, 1}, 1) == 1);
  CHECK(fixed_point_count(IntMatrix2{2, 1, 1, 1}, 2) == 5);
  CHECK_THROWS_AS(fixed_point_count(IntMatrix2::identity(), 1), std::domain_error);
  CHECK_THROWS_AS(fixed_point_count(IntMatrix2{0, -1, 1, 0}, 4), std::domain_error);
  CHECK_THROWS_AS(fixed_point_count(IntMatrix2{2, 1, 1, 1}, 30), std::out_of_range);

  for (const oracle::M& m : oracle::scan(2)) {
    const IntMatrix2 a = from(m);
    for (int pw = 1; pw <= 3; ++pw) {
      const Integer nf = nielsen_number(a, pw);
      if (nf == 0) continue;
      CAPTURE(a.str());
      CAPTURE(pw);
      CHECK(fixed_point_count(a, pw) == nf);
      CHECK(oracle::fixed_points(m, pw, nf.get_si()) == nf.get_si());
    }
  }
}

TEST_CASE("fixed_point_count enumeration branches agree") {
  // m = |det(id - A^k)| straddles the literal-loop cutoff; both sides must
  // give the Nielsen number, and the literal oracle confirms mid-size m.
  const IntMatrix2 cat{2, 1, 1, 1};
  for (int pw = 5; pw <= 11; ++pw) {
    const Integer nf = nielsen_number(cat, pw);
    CAPTURE(pw);
    CHECK(fixed_point_count(cat, pw) == nf);
  }
  CHECK(nielsen_number(cat, 9) > 4096);
  CHECK(oracle::fixed_points({2, 1, 1, 1}, 9, nielsen_number(cat, 9).get_si()) ==
        nielsen_number(cat, 9).get_si());
  CHECK(fixed_point_count(IntMatrix2{3, 1, 1, 2}, 4) == nielsen_number(IntMatrix2{3, 1, 1, 2}, 4));
}

TEST_CASE("ord_mod and observed_orders") {
  CHECK(ord_mod(Integer(2), 7) == 3);
  CHECK(ord_mod(Integer(2), 5) == 4);
  CHECK(ord_mod(Integer(-1), 3) == 2);
  CHECK(ord_mod(Integer(3), 1093) == 7);
  CHECK(ord_mod(Integer(10), 3) == 1);
  CHECK_THROWS_AS(ord_mod(Integer(2), 4), std::invalid_argument);
  CHECK_THROWS_AS(ord_mod(Integer(2), 1), std::invalid_argument);

  for (long long a : {-5LL, -2LL, 2LL, 3LL, 7LL}) {
    for (long long n = 2; n <= 60; ++n) {
      if (oracle::gcd(a, n) != 1) continue;
      CHECK(ord_mod(Integer(long(a)), n) == static_cast<std::uint64_t>(oracle::order(a, n)));
    }
  }

  CHECK(observed_orders(Integer(1), 20) == PeriodWindow{1});
  CHECK(observed_orders(Integer(-1), 20) == PeriodWindow{1, 2});
  const PeriodWindow two = observed_orders(Integer(2), 200);
  CHECK_FALSE(two.contains(1));
  CHECK(two.contains(2));
  CHECK(two.contains(10));
  CHECK_THROWS_AS(observed_orders(Integer(0), 20), std::invalid_argument);
}
