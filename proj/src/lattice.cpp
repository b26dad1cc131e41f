#include "toral/lattice.hpp"

#include "toral/nielsen.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace toral {

namespace {

__extension__ using Wide = unsigned __int128;

std::uint64_t residue(const Integer& v, std::uint64_t n) {
  return mpz_fdiv_ui(v.get_mpz_t(), n);
}

std::uint64_t mulmod(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<Wide>(x) * y % m);
}

std::uint64_t addmod(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
  const std::uint64_t s = x + y;  // x, y < m < 2^63
  return s >= m ? s - m : s;
}

}  // namespace

ResidueMatrix ResidueMatrix::reduce(const IntMatrix2& m, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("modulus must be positive");
  return {n, residue(m.alpha, n), residue(m.beta, n), residue(m.gamma, n), residue(m.delta, n)};
}

template <typename OnCycle>
void LatticeScanner::walk(const IntMatrix2& a, std::uint32_t n, OnCycle&& on_cycle) {
  if (n == 0 || n > kMaxLatticeDenominator) {
    throw std::out_of_range("lattice denominator must lie in 1.." +
                            std::to_string(kMaxLatticeDenominator));
  }
  const ResidueMatrix r = ResidueMatrix::reduce(a, n);
  const std::size_t points = std::size_t{n} * n;
  mark_.assign(points, 0);
  step_.resize(points);

  // Column tables: row_tables_[j * n + v] = (entry j) * v mod n.
  row_tables_.resize(4 * std::size_t{n});
  const std::uint64_t entries[4] = {r.a, r.b, r.c, r.d};
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::uint32_t v = 0; v < n; ++v) {
      row_tables_[j * n + v] = static_cast<std::uint32_t>(entries[j] * v % n);
    }
  }
  const std::uint32_t* ta = row_tables_.data();
  const std::uint32_t* tb = ta + n;
  const std::uint32_t* tc = tb + n;
  const std::uint32_t* td = tc + n;

  // mark_ holds the id of the walk that first reached a point (0 = unvisited);
  // a walk that runs into its own id has closed a cycle.
  std::uint32_t walk_id = 0;
  for (std::uint32_t sx = 0; sx < n; ++sx) {
    for (std::uint32_t sy = 0; sy < n; ++sy) {
      if (mark_[std::size_t{sx} * n + sy] != 0) continue;
      ++walk_id;
      std::uint32_t x = sx, y = sy, k = 0;
      for (;;) {
        const std::size_t i = std::size_t{x} * n + y;
        if (mark_[i] != 0) {
          if (mark_[i] == walk_id) on_cycle(static_cast<Period>(k - step_[i]), x, y);
          break;
        }
        mark_[i] = walk_id;
        step_[i] = k++;
        std::uint32_t nx = ta[x] + tb[y];
        if (nx >= n) nx -= n;
        std::uint32_t ny = tc[x] + td[y];
        if (ny >= n) ny -= n;
        x = nx;
        y = ny;
      }
    }
  }
}

CycleStats LatticeScanner::cycles(const IntMatrix2& a, std::uint32_t n) {
  CycleStats stats;
  stats.n = n;
  walk(a, n, [&](Period len, std::uint32_t, std::uint32_t) {
    ++stats.cycles[len];
    stats.periodic_points += len;
  });
  return stats;
}

std::vector<LatticeCycle> LatticeScanner::cycle_list(const IntMatrix2& a, std::uint32_t n) {
  std::vector<LatticeCycle> out;
  walk(a, n, [&](Period len, std::uint32_t x, std::uint32_t y) { out.push_back({len, x, y}); });
  return out;
}

CycleStats lattice_cycles(const IntMatrix2& a, std::uint32_t n) {
  LatticeScanner scanner;
  return scanner.cycles(a, n);
}

PeriodScan scan_periods(const IntMatrix2& a, std::uint32_t n_max,
                        const std::optional<PeriodWindow>& target) {
  PeriodScan scan;
  scan.observed.insert(1);  // the origin is fixed by every integer matrix
  auto covered = [&] { return target && is_subset(*target, scan.observed); };
  if (covered()) {
    scan.target_reached = true;
    return scan;
  }
  LatticeScanner scanner;
  for (std::uint32_t n = 2; n <= n_max; ++n) {
    const CycleStats stats = scanner.cycles(a, n);
    for (const auto& [len, count] : stats.cycles) scan.observed.insert(len);
    scan.n_scanned = n;
    if (covered()) {
      scan.target_reached = true;
      break;
    }
  }
  return scan;
}

PeriodWindow observed_periods(const IntMatrix2& a, std::uint32_t n_max) {
  return scan_periods(a, n_max).observed;
}

Integer fixed_point_count(const IntMatrix2& a, std::uint64_t power) {
  const Integer nielsen = nielsen_number(a, power);
  if (nielsen == 0) {
    throw std::domain_error("1 is an eigenvalue of A^" + std::to_string(power) +
                            "; its fixed points form subtori");
  }
  if (!nielsen.fits_ulong_p() || nielsen.get_ui() > 0xffffffffUL) {
    throw std::out_of_range("lattice L_" + nielsen.get_str() + " is too large to enumerate");
  }
  const std::uint64_t m = nielsen.get_ui();
  if (m == 1) return 1;

  // B = A^power mod m by square-and-multiply on residues.
  ResidueMatrix base = ResidueMatrix::reduce(a, m);
  ResidueMatrix b{m, 1, 0, 0, 1};
  auto mul = [m](const ResidueMatrix& x, const ResidueMatrix& y) {
    return ResidueMatrix{m, addmod(mulmod(x.a, y.a, m), mulmod(x.b, y.c, m), m),
                         addmod(mulmod(x.a, y.b, m), mulmod(x.b, y.d, m), m),
                         addmod(mulmod(x.c, y.a, m), mulmod(x.d, y.c, m), m),
                         addmod(mulmod(x.c, y.b, m), mulmod(x.d, y.d, m), m)};
  };
  for (std::uint64_t e = power; e > 0; e >>= 1U) {
    if (e & 1U) b = mul(b, base);
    base = mul(base, base);
  }

  if (m <= 4096) {
    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x < m; ++x) {
      for (std::uint64_t y = 0; y < m; ++y) {
        const std::uint64_t bx = addmod(mulmod(b.a, x, m), mulmod(b.b, y, m), m);
        const std::uint64_t by = addmod(mulmod(b.c, x, m), mulmod(b.d, y, m), m);
        if (bx == x && by == y) ++count;
      }
    }
    return Integer(static_cast<unsigned long>(count));
  }

  // Large lattices: (B - id)(x, y) = 0 splits as column(x) = -column(y), so
  // tabulate the y-column over all y and look up each x against it.
  const std::uint64_t p = (b.a + m - 1) % m;
  const std::uint64_t q = b.b;
  const std::uint64_t r = b.c;
  const std::uint64_t s = (b.d + m - 1) % m;
  std::vector<std::uint64_t> y_keys(m);
  for (std::uint64_t y = 0; y < m; ++y) {
    y_keys[y] = mulmod(q, y, m) * m + mulmod(s, y, m);
  }
  std::sort(y_keys.begin(), y_keys.end());
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < m; ++x) {
    const std::uint64_t u = (m - mulmod(p, x, m)) % m;
    const std::uint64_t v = (m - mulmod(r, x, m)) % m;
    const auto range = std::equal_range(y_keys.begin(), y_keys.end(), u * m + v);
    count += static_cast<std::uint64_t>(range.second - range.first);
  }
  return Integer(static_cast<unsigned long>(count));
}

std::uint64_t ord_mod(const Integer& a, std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("ord_mod needs a modulus n >= 2");
  const std::uint64_t base = residue(a, n);
  if (std::gcd(base, n) != 1) {
    throw std::invalid_argument("ord_mod: gcd(" + a.get_str() + ", " + std::to_string(n) + ") != 1");
  }
  std::uint64_t power = base;
  std::uint64_t k = 1;
  while (power != 1) {
    power = mulmod(power, base, n);
    ++k;
  }
  return k;
}

PeriodWindow observed_orders(const Integer& a, std::uint64_t n_max) {
  if (a == 0) throw std::invalid_argument("observed_orders needs a != 0");
  PeriodWindow orders;
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    if (std::gcd(residue(a, n), n) == 1) orders.insert(ord_mod(a, n));
  }
  return orders;
}

}  // namespace toral
