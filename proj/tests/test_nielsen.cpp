#include "support.hpp"
#include "toral/nielsen.hpp"
#include "toral/periods.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace toral;
using toral::test::from;

namespace {

long long oracle_nielsen(const oracle::M& m, int n) {
  const oracle::M p = oracle::power(m, n);
  const long long v = oracle::det({1 - p.a, -p.b, -p.c, 1 - p.d});
  return v < 0 ? -v : v;
}

}  // namespace

TEST_CASE("nielsen examples") {
  const IntMatrix2 cat{2, 1, 1, 1};
  CHECK(nielsen_number(cat, 1) == 1);
  CHECK(nielsen_number(cat, 2) == 5);
  CHECK(nielsen_sequence(cat, 5).values == std::vector<Integer>{1, 5, 16, 45, 121});
  CHECK(nielsen_number(IntMatrix2::identity(), 3) == 0);
  CHECK(nielsen_number(IntMatrix2::scalar(2), 1) == 1);
  CHECK(nielsen_number(IntMatrix2::scalar(2), 2) == 9);
  CHECK(nielsen_number(IntMatrix2{0, -1, 1, 0}, 4) == 0);
  CHECK(nielsen_number(IntMatrix2{0, -1, 1, 0}, 1) == 2);
  CHECK(power_trace(cat, 0) == 2);
  CHECK(power_trace(cat, 3) == 18);

  for (int n = 1; n <= 5; ++n) CHECK(nielsen_number(cat, n) == toral::test::big(oracle_nielsen({2, 1, 1, 1}, n)));
  CHECK_THROWS_AS(nielsen_number(cat, 0), std::invalid_argument);
  CHECK_THROWS_AS(nielsen_sequence(cat, 0), std::invalid_argument);
}

TEST_CASE("large exponents stay exact") {
  // 3 id: |1 - 3^n|^2.
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 3, 90);
  CHECK(nielsen_number(IntMatrix2::scalar(3), 90) == (p - 1) * (p - 1));
  CHECK(nielsen_number(IntMatrix2{5, 7, -2, 3}, 40) == nielsen_number_direct(IntMatrix2{5, 7, -2, 3}, 40));
}

TEST_CASE("properties over entries in [-3, 3]") {
  for (const oracle::M& m : oracle::scan(3)) {
    const IntMatrix2 a = from(m);
    CAPTURE(a.str());
    const Classification c = classify_torus(a);
    const Invariants inv = invariants(a);
    const UnityPowerSet u = unity_power_set(c.eigen, inv.t, inv.d);
    for (int n = 1; n <= 12; ++n) {
      const Integer v = nielsen_number(a, n);
      CHECK((v == 0) == u.contains(n));
      if (n <= 8) {
        CHECK(v == nielsen_number_direct(a, n));
        CHECK(v == toral::test::big(oracle_nielsen(m, n)));
      }
    }
  }
}
