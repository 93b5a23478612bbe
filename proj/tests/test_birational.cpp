#include <doctest.h>

#include "degloci/birational.hpp"
#include "degloci/errors.hpp"

using namespace degloci;

TEST_CASE("flip discrepancies") {
  for (int g = 2; g <= 50; ++g) {
    for (int i = 1; i <= g - 1; ++i) {
      FlipData f = flip_data(g, i);
      int n = g - i;  // flips are indexed by the complementary degree
      REQUIRE(f.m == 3 * n - 2);
      REQUIRE(f.p == 4 * n - 2);
      REQUIRE(kappa_flip_ok(g, i, Rational(1, 2)));
      Rational half_p(f.p, 2);
      half_p.canonicalize();
      REQUIRE(Rational(f.m) - half_p == g - i - 1);
      // Exact threshold m / p.
      Rational t(f.m, f.p);
      t.canonicalize();
      REQUIRE(kappa_flip_ok(g, i, t));
      REQUIRE_FALSE(kappa_flip_ok(g, i, t + Rational(1, 1000000)));
    }
  }
  CHECK_THROWS_AS(flip_data(1, 1), Error);
  CHECK_THROWS_AS(flip_data(5, 5), Error);
}

TEST_CASE("blow-up exponents") {
  BlowupExponents b = blowup_exponents(2, Rational(1, 2));
  CHECK(b.bundle_exp == 0);
  CHECK(b.trivial_chain);
  CHECK(b.canonical_m == 1);
  for (int g = 2; g <= 30; ++g) {
    BlowupExponents e = blowup_exponents(g, Rational(0));
    CHECK(blowup_exponents(g, e.threshold).bundle_exp == 0);
    CHECK(e.fiber_degree == -2 * e.canonical_m);
    CHECK(e.trivial_chain == (g == 2));
  }
}

TEST_CASE("divisor inequalities") {
  CHECK(bir_mod_ok({{1, 2}, {3, 4}}, Rational(1, 2)));
  CHECK_FALSE(bir_mod_ok({{1, 2}, {3, 4}}, Rational(3, 5)));
  CHECK(bir_mod_ok({}, Rational(7)));
}
