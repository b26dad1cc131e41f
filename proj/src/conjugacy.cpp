#include "toral/conjugacy.hpp"

#include "toral/lattice.hpp"

#include <numeric>
#include <stdexcept>

namespace toral {

ConjugacyTriple triple(const IntMatrix2& a) {
  const Invariants inv = invariants(a);
  return {inv.t, inv.d, inv.g};
}

IntMatrix2 normal_form(const Integer& a, const Integer& b, const Integer& g) {
  if (a > b) throw std::invalid_argument("normal_form expects eigenvalues ordered a <= b");
  if (g < 0) throw std::invalid_argument("mgcd must be nonnegative");
  if (g == 0) {
    if (a != b) throw std::invalid_argument("mgcd 0 only occurs for scalar matrices (a = b)");
  } else if (!mpz_divisible_p(Integer(b - a).get_mpz_t(), g.get_mpz_t())) {
    throw std::invalid_argument("mgcd " + g.get_str() + " does not divide b - a = " +
                                Integer(b - a).get_str());
  }
  return {a, g, Integer(0), b};
}

namespace {

bool conjugates(const ResidueMatrix& p, const ResidueMatrix& a, const ResidueMatrix& b) {
  const std::uint64_t n = p.n;
  if (std::gcd((p.a * p.d + n * n - p.b * p.c % n) % n, n) != 1) return false;
  // P A and B P entrywise; all residues are below 2^16 so products stay small.
  return (p.a * a.a + p.b * a.c) % n == (b.a * p.a + b.b * p.c) % n &&
         (p.a * a.b + p.b * a.d) % n == (b.a * p.b + b.b * p.d) % n &&
         (p.c * a.a + p.d * a.c) % n == (b.c * p.a + b.d * p.c) % n &&
         (p.c * a.b + p.d * a.d) % n == (b.c * p.b + b.d * p.d) % n;
}

void require_modulus(std::uint32_t n) {
  if (n < 2 || n > kMaxLatticeDenominator) {
    throw std::out_of_range("conjugator search needs 2 <= n <= " + std::to_string(kMaxLatticeDenominator));
  }
}

}  // namespace

bool is_conjugator_mod_n(const IntMatrix2& p, const IntMatrix2& a, const IntMatrix2& b, std::uint32_t n) {
  require_modulus(n);
  return conjugates(ResidueMatrix::reduce(p, n), ResidueMatrix::reduce(a, n), ResidueMatrix::reduce(b, n));
}

std::optional<IntMatrix2> conjugate_mod_n(const IntMatrix2& a, const IntMatrix2& b, std::uint32_t n) {
  require_modulus(n);
  const ResidueMatrix ra = ResidueMatrix::reduce(a, n);
  const ResidueMatrix rb = ResidueMatrix::reduce(b, n);
  auto as_matrix = [](const ResidueMatrix& p) {
    return IntMatrix2{Integer(static_cast<unsigned long>(p.a)), Integer(static_cast<unsigned long>(p.b)),
                      Integer(static_cast<unsigned long>(p.c)), Integer(static_cast<unsigned long>(p.d))};
  };
  const ResidueMatrix id{n, 1, 0, 0, 1};
  if (conjugates(id, ra, rb)) return as_matrix(id);
  for (std::uint64_t p00 = 0; p00 < n; ++p00) {
    for (std::uint64_t p01 = 0; p01 < n; ++p01) {
      for (std::uint64_t p10 = 0; p10 < n; ++p10) {
        for (std::uint64_t p11 = 0; p11 < n; ++p11) {
          const ResidueMatrix p{n, p00, p01, p10, p11};
          if (conjugates(p, ra, rb)) return as_matrix(p);
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace toral
