#include "toral/nielsen.hpp"

#include <stdexcept>

namespace toral {

namespace {

void require_positive(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Nielsen numbers are defined for iterates n >= 1");
}

Integer pow_int(const Integer& base, std::uint64_t exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

}  // namespace

Integer power_trace(const IntMatrix2& a, std::uint64_t n) {
  const Integer t = a.trace();
  const Integer d = a.det();
  Integer prev = 2;  // s_0
  if (n == 0) return prev;
  Integer cur = t;
  for (std::uint64_t k = 1; k < n; ++k) {
    Integer next = t * cur - d * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Integer nielsen_number(const IntMatrix2& a, std::uint64_t n) {
  require_positive(n);
  return abs(Integer(1 + pow_int(a.det(), n) - power_trace(a, n)));
}

Integer nielsen_number_direct(const IntMatrix2& a, std::uint64_t n) {
  require_positive(n);
  const IntMatrix2 p = mat_pow(a, n);
  const IntMatrix2 diff{1 - p.alpha, -p.beta, -p.gamma, 1 - p.delta};
  return abs(diff.det());
}

NielsenSequence nielsen_sequence(const IntMatrix2& a, std::uint64_t limit) {
  require_positive(limit);
  const Integer t = a.trace();
  const Integer d = a.det();
  NielsenSequence seq;
  seq.values.reserve(limit);
  Integer prev = 2;
  Integer cur = t;
  Integer d_pow = d;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    seq.values.push_back(abs(Integer(1 + d_pow - cur)));
    Integer next = t * cur - d * prev;
    prev = std::move(cur);
    cur = std::move(next);
    d_pow *= d;
  }
  for (std::uint64_t n = 1; n <= std::min<std::uint64_t>(limit, 6); ++n) {
    if (seq.values[n - 1] != nielsen_number_direct(a, n)) {
      throw std::logic_error("trace recurrence disagrees with det(id - A^n) at n = " +
                             std::to_string(n) + " for " + a.str());
    }
  }
  return seq;
}

}  // namespace toral
