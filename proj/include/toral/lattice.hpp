#pragma once

// Brute-force orbit oracle: the action x -> A x on the rational lattices
// L_n = {(k1/n, k2/n)}, i.e. on (Z/nZ)^2.

#include "toral/algebra.hpp"
#include "toral/period_set.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace toral {

/// Per-lattice arithmetic runs on 64-bit residues. Products of two residues
/// stay below n^2 and point indices below n^2 must fit in 32 bits.
inline constexpr std::uint32_t kMaxLatticeDenominator = 65535;

struct CycleStats {
  std::uint32_t n = 1;
  std::map<Period, std::uint64_t> cycles;  // least period -> number of cycles
  std::uint64_t periodic_points = 0;

  friend bool operator==(const CycleStats&, const CycleStats&) = default;
};

/// One cycle of the functional graph, with a representative point.
struct LatticeCycle {
  Period length;
  std::uint32_t x, y;
};

/// A reduced modulo n.
struct ResidueMatrix {
  std::uint64_t n, a, b, c, d;

  static ResidueMatrix reduce(const IntMatrix2& m, std::uint64_t n);
  std::uint64_t row0(std::uint64_t x, std::uint64_t y) const { return (a * x + b * y) % n; }
  std::uint64_t row1(std::uint64_t x, std::uint64_t y) const { return (c * x + d * y) % n; }
};

/// Cycle decomposition of the functional graph of x -> A x mod n. Owns the
/// per-point work buffers so repeated calls over a range of denominators do
/// not reallocate.
class LatticeScanner {
 public:
  CycleStats cycles(const IntMatrix2& a, std::uint32_t n);
  std::vector<LatticeCycle> cycle_list(const IntMatrix2& a, std::uint32_t n);

 private:
  template <typename OnCycle>
  void walk(const IntMatrix2& a, std::uint32_t n, OnCycle&& on_cycle);

  std::vector<std::uint32_t> mark_;
  std::vector<std::uint32_t> step_;
  std::vector<std::uint32_t> row_tables_;
};

CycleStats lattice_cycles(const IntMatrix2& a, std::uint32_t n);

/// {1} ∪ all cycle lengths on L_n for 2 <= n <= n_max.
PeriodWindow observed_periods(const IntMatrix2& a, std::uint32_t n_max);

struct PeriodScan {
  PeriodWindow observed;
  std::uint32_t n_scanned = 1;  // largest denominator visited
  bool target_reached = false;
};

/// observed_periods, but stops growing n as soon as `target` is covered.
/// Without a target it scans the full range.
PeriodScan scan_periods(const IntMatrix2& a, std::uint32_t n_max,
                        const std::optional<PeriodWindow>& target = std::nullopt);

/// Number of torus points fixed by A^power, counted by enumerating L_m with
/// m = |det(id - A^power)|. Throws std::domain_error when 1 is an eigenvalue
/// of A^power (the fixed points then form subtori).
Integer fixed_point_count(const IntMatrix2& a, std::uint64_t power);

/// Least k > 0 with a^k = 1 mod n. Requires n >= 2 and gcd(a, n) = 1.
std::uint64_t ord_mod(const Integer& a, std::uint64_t n);

/// {ord_n(a) : 2 <= n <= n_max, gcd(a, n) = 1}; requires a != 0.
PeriodWindow observed_orders(const Integer& a, std::uint64_t n_max);

}  // namespace toral
