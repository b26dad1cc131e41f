#include "toral/algebra.hpp"

#include <array>
#include <sstream>

namespace toral {

std::string IntMatrix2::str() const {
  std::ostringstream out;
  out << "[[" << alpha << ", " << beta << "], [" << gamma << ", " << delta << "]]";
  return out.str();
}

IntMatrix2 mat_mul(const IntMatrix2& a, const IntMatrix2& b) {
  return {a.alpha * b.alpha + a.beta * b.gamma, a.alpha * b.beta + a.beta * b.delta,
          a.gamma * b.alpha + a.delta * b.gamma, a.gamma * b.beta + a.delta * b.delta};
}

IntMatrix2 mat_pow(IntMatrix2 a, std::uint64_t n) {
  IntMatrix2 result = IntMatrix2::identity();
  while (n > 0) {
    if (n & 1U) result = mat_mul(result, a);
    n >>= 1U;
    if (n > 0) a = mat_mul(a, a);
  }
  return result;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Invariants invariants(const IntMatrix2& a) {
  Invariants inv;
  inv.t = a.trace();
  inv.d = a.det();
  inv.delta = inv.t * inv.t - 4 * inv.d;
  inv.g = gcd(gcd(a.beta, a.gamma), a.delta - a.alpha);
  return inv;
}

std::optional<Integer> exact_sqrt(const Integer& n) {
  if (n < 0) return std::nullopt;
  Integer root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  if (rem != 0) return std::nullopt;
  return root;
}

EigenStructure eigen_classify(const IntMatrix2& a) {
  const Integer t = a.trace();
  const Integer d = a.det();
  const Integer delta = t * t - 4 * d;
  if (delta < 0) return ComplexPair{t, d};
  if (auto root = exact_sqrt(delta)) {
    // t and delta have the same parity, so both numerators are even.
    Integer lo = t - *root;
    Integer hi = t + *root;
    mpz_divexact_ui(lo.get_mpz_t(), lo.get_mpz_t(), 2);
    mpz_divexact_ui(hi.get_mpz_t(), hi.get_mpz_t(), 2);
    return IntegerPair{lo, hi};
  }
  return RealQuadratic{t, d, delta};
}

bool has_integer_eigenvalue(const EigenStructure& e, const Integer& value) {
  if (const auto* p = std::get_if<IntegerPair>(&e)) return p->a == value || p->b == value;
  return false;
}

MinimalPoly minimal_poly(const IntMatrix2& a) {
  if (a.is_scalar()) return LinearPoly{a.alpha};
  return CharPoly{a.trace(), a.det()};
}

namespace {

// Appends " + c" / " - c" style terms; `var` is the monomial suffix.
void append_term(std::ostringstream& out, const Integer& coeff, const char* var) {
  if (coeff == 0) return;
  out << (coeff < 0 ? "-" : "+");
  const Integer mag = abs(coeff);
  if (mag != 1 || *var == '\0') out << mag;
  out << var;
}

}  // namespace

std::string poly_string(const MinimalPoly& mu) {
  std::ostringstream out;
  if (const auto* lin = std::get_if<LinearPoly>(&mu)) {
    out << "x";
    append_term(out, -lin->a, "");
  } else {
    const auto& chi = std::get<CharPoly>(mu);
    out << "x^2";
    append_term(out, -chi.t, "x");
    append_term(out, chi.d, "");
  }
  return out.str();
}

std::optional<int> finite_order(const IntMatrix2& a) {
  const IntMatrix2 id = IntMatrix2::identity();
  for (int k : std::array{1, 2, 3, 4, 6}) {
    if (mat_pow(a, static_cast<std::uint64_t>(k)) == id) return k;
  }
  return std::nullopt;
}

}  // namespace toral
