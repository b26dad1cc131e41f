#include "support.hpp"
#include "toral/algebra.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace toral;
using toral::test::from;

TEST_CASE("mat_mul") {
  const IntMatrix2 a{2, 1, 1, 1};
  CHECK(mat_mul(IntMatrix2::identity(), a) == a);
  CHECK(mat_mul(IntMatrix2{1, 1, 0, 1}, IntMatrix2{1, 1, 0, 1}) == IntMatrix2{1, 2, 0, 1});
  CHECK(mat_mul(a, a) == IntMatrix2{5, 3, 3, 2});
}

TEST_CASE("mat_pow") {
  CHECK(mat_pow(IntMatrix2{7, -3, 2, 5}, 0) == IntMatrix2::identity());
  CHECK(mat_pow(IntMatrix2{0, -1, 1, 0}, 4) == IntMatrix2::identity());

  // Expected value frozen from the repeated-multiplication oracle.
  const oracle::M cube = oracle::power({2, 1, 1, 1}, 3);
  CHECK(cube == oracle::M{13, 8, 8, 5});
  CHECK(mat_pow(IntMatrix2{2, 1, 1, 1}, 3) == IntMatrix2{13, 8, 8, 5});

  SUBCASE("entries grow past 64 bits exactly") {
    // Fibonacci: [[1,1],[1,0]]^n = [[F(n+1), F(n)], [F(n), F(n-1)]].
    const IntMatrix2 p = mat_pow(IntMatrix2{1, 1, 1, 0}, 100);
    CHECK(p.beta == Integer("354224848179261915075"));
    CHECK(p.alpha == Integer("573147844013817084101"));
    CHECK(p.det() == 1);
  }
}

TEST_CASE("invariants") {
  Invariants inv = invariants(IntMatrix2{2, 1, 1, 1});
  CHECK(inv.t == 3);
  CHECK(inv.d == 1);
  CHECK(inv.delta == 5);
  CHECK(inv.g == 1);

  inv = invariants(IntMatrix2::scalar(3));
  CHECK(inv.t == 6);
  CHECK(inv.d == 9);
  CHECK(inv.delta == 0);
  CHECK(inv.g == 0);

  inv = invariants(IntMatrix2{1, 1, 0, 1});
  CHECK(inv.t == 2);
  CHECK(inv.d == 1);
  CHECK(inv.delta == 0);
  CHECK(inv.g == 1);

  CHECK(invariants(IntMatrix2{0, -4, 6, 2}).g == 2);  // gcd(-4, 6, 2) is nonnegative
}

TEST_CASE("eigen_classify") {
  const auto rot = eigen_classify(IntMatrix2{0, -1, 1, 0});
  REQUIRE(std::holds_alternative<ComplexPair>(rot));
  CHECK(std::get<ComplexPair>(rot).t == 0);
  CHECK(std::get<ComplexPair>(rot).d == 1);

  const auto diag = eigen_classify(IntMatrix2{1, 0, 0, -2});
  REQUIRE(std::holds_alternative<IntegerPair>(diag));
  CHECK(std::get<IntegerPair>(diag).a == -2);
  CHECK(std::get<IntegerPair>(diag).b == 1);

  const auto golden = eigen_classify(IntMatrix2{1, 1, 1, 0});
  REQUIRE(std::holds_alternative<RealQuadratic>(golden));
  CHECK(std::get<RealQuadratic>(golden).delta == 5);
  CHECK_FALSE(oracle::is_square(5));

  const auto double_root = eigen_classify(IntMatrix2{-1, 1, 0, -1});
  REQUIRE(std::holds_alternative<IntegerPair>(double_root));
  CHECK(std::get<IntegerPair>(double_root).a == -1);
  CHECK(std::get<IntegerPair>(double_root).b == -1);
}

TEST_CASE("minimal_poly") {
  CHECK(std::get<LinearPoly>(minimal_poly(IntMatrix2::identity())).a == 1);
  CHECK(std::holds_alternative<CharPoly>(minimal_poly(IntMatrix2{1, 1, 0, 1})));
  const MinimalPoly nil = minimal_poly(IntMatrix2{0, 1, 0, 0});
  REQUIRE(std::holds_alternative<CharPoly>(nil));
  CHECK(poly_string(nil) == "x^2");
  CHECK(poly_string(minimal_poly(IntMatrix2::identity())) == "x-1");
  CHECK(poly_string(minimal_poly(IntMatrix2::scalar(-2))) == "x+2");
  CHECK(poly_string(minimal_poly(IntMatrix2::scalar(0))) == "x");
  CHECK(poly_string(minimal_poly(IntMatrix2{2, 1, 1, 1})) == "x^2-3x+1");
  CHECK(poly_string(minimal_poly(IntMatrix2{0, -1, 1, -1})) == "x^2+x+1");
  CHECK(poly_string(minimal_poly(IntMatrix2{1, 1, 1, 0})) == "x^2-x-1");
}

TEST_CASE("finite_order") {
  CHECK(finite_order(IntMatrix2::scalar(-1)) == 2);
  CHECK(finite_order(IntMatrix2{0, -1, 1, -1}) == 3);
  CHECK(finite_order(IntMatrix2{0, -1, 1, 0}) == 4);
  CHECK(finite_order(IntMatrix2{1, -1, 1, 0}) == 6);
  CHECK(finite_order(IntMatrix2{0, 1, 1, 0}) == 2);
  CHECK(finite_order(IntMatrix2::identity()) == 1);

  const oracle::M cat{2, 1, 1, 1};
  for (int k = 1; k <= 6; ++k) CHECK_FALSE(oracle::power(cat, k) == oracle::M{1, 0, 0, 1});
  CHECK_FALSE(finite_order(from(cat)).has_value());
  CHECK_FALSE(finite_order(IntMatrix2{1, 1, 0, 1}).has_value());
}

TEST_CASE("is_automorphism") {
  CHECK(is_automorphism(IntMatrix2{2, 1, 1, 1}));
  CHECK_FALSE(is_automorphism(IntMatrix2{1, 0, 0, -2}));
  CHECK(is_automorphism(IntMatrix2{0, -1, 1, 0}));
  CHECK(is_automorphism(IntMatrix2{1, 0, 0, -1}));
}

TEST_CASE("properties over entries in [-3, 3]") {
  const oracle::M id{1, 0, 0, 1};
  for (const oracle::M& m : oracle::scan(3)) {
    const IntMatrix2 a = from(m);
    const Invariants inv = invariants(a);
    CAPTURE(a.str());

    // Determinant is multiplicative along powers; trace matches the oracle.
    for (int n = 0; n <= 6; ++n) {
      const IntMatrix2 p = mat_pow(a, n);
      const oracle::M q = oracle::power(m, n);
      Integer dn;
      mpz_pow_ui(dn.get_mpz_t(), inv.d.get_mpz_t(), n);
      CHECK(p.det() == dn);
      CHECK(p.trace() == toral::test::big(q.a + q.d));
    }

    CHECK(inv.delta == inv.t * inv.t - 4 * inv.d);
    CHECK((inv.g == 0) == a.is_scalar());
    if (inv.delta != 0) CHECK(mpz_divisible_p(inv.delta.get_mpz_t(), Integer(inv.g * inv.g).get_mpz_t()));

    const EigenStructure e = eigen_classify(a);
    if (const auto* ip = std::get_if<IntegerPair>(&e)) {
      CHECK(ip->a <= ip->b);
      CHECK(ip->a + ip->b == inv.t);
      CHECK(ip->a * ip->b == inv.d);
      for (const Integer& root : {ip->a, ip->b}) CHECK(root * root - inv.t * root + inv.d == 0);
    } else if (std::holds_alternative<RealQuadratic>(e)) {
      CHECK(inv.delta > 0);
      CHECK_FALSE(oracle::is_square(inv.delta.get_si()));
    } else {
      CHECK(inv.delta < 0);
      CHECK(inv.d >= 1);
    }
    if (inv.delta == 0 && inv.t % 2 == 0) {
      const auto* ip = std::get_if<IntegerPair>(&e);
      REQUIRE(ip != nullptr);
      CHECK(ip->a == inv.t / 2);
      CHECK(ip->b == inv.t / 2);
    }

    if (auto k = finite_order(a)) {
      CHECK(oracle::power(m, *k) == id);
      for (int j = 1; j < *k; ++j) CHECK_FALSE(oracle::power(m, j) == id);
    } else {
      for (int j = 1; j <= 12; ++j) CHECK_FALSE(oracle::power(m, j) == id);
    }

    const MinimalPoly mu = minimal_poly(a);
    if (const auto* lin = std::get_if<LinearPoly>(&mu)) {
      CHECK(a == IntMatrix2::scalar(lin->a));
    } else {
      CHECK_FALSE(a.is_scalar());
    }
  }
}
