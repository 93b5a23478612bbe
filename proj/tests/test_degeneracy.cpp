#include <doctest.h>

#include "degloci/degeneracy.hpp"
#include "degloci/errors.hpp"
#include "support.hpp"

using namespace testing;

namespace {

PolyMatrix M(const RingPtr& R, const std::vector<std::vector<std::string>>& rows) { return PolyMatrix::parse(R, rows); }

Ideal I(const RingPtr& R, const std::vector<std::string>& gens) { return Ideal(R, Ps(gens, R)); }

}  // namespace

TEST_CASE("fitting ideals of the quadratic models") {
  auto R = xyz();
  CHECK(ideal_equal(fitting_ideal(M(R, {{"x", "y", "0"}, {"0", "y", "z"}})), I(R, {"x*y", "x*z", "y*z"})));
  CHECK(ideal_equal(fitting_ideal(M(R, {{"x", "y", "0"}, {"0", "x", "z"}})), I(R, {"x^2", "x*z", "y*z"})));
  CHECK(ideal_equal(fitting_ideal(M(R, {{"x", "y", "0"}, {"y", "z", "x"}})), I(R, {"x*z - y^2", "x^2", "x*y"})));
}

TEST_CASE("maximal minors span the kernel [property]") {
  auto R = xyz();
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t m = 1 + trial % 3;
    std::vector<std::vector<Poly>> rows(m);
    for (auto& row : rows) {
      for (std::size_t j = 0; j <= m; ++j) row.push_back(random_poly(gen, R, 2, 1));
    }
    PolyMatrix phi(R, rows);
    auto minors = signed_maximal_minors(phi);
    REQUIRE(minors.size() == m + 1);
    for (std::size_t i = 0; i < m; ++i) {
      Poly s(R);
      for (std::size_t j = 0; j <= m; ++j) s += phi.at(i, j) * minors[j];
      REQUIRE(s.is_zero());
    }
    // Cramer check: appending row i again gives a zero determinant, appending a
    // unit vector e_j gives +-minor j.
    for (std::size_t j = 0; j <= m; ++j) {
      auto square = rows;
      std::vector<Poly> e(m + 1, Poly(R));
      e[j] = Poly::constant(R, 1);
      square.push_back(e);
      Poly d = determinant(square, R);
      REQUIRE((d == minors[j] || d == -minors[j]));
    }
  }
}

TEST_CASE("shape and degeneracy errors") {
  auto R = xyz();
  CHECK_THROWS_AS(M(R, {{"x", "y"}, {"y", "z"}}), UnsupportedShape);
  CHECK_THROWS_AS(fitting_ideal(M(R, {{"x", "y", "0"}, {"2*x", "2*y", "0"}})), DegenerateMatrix);
}

TEST_CASE("rank strata of the quadratic models") {
  auto R = xyz();
  for (auto rows : {std::vector<std::vector<std::string>>{{"x", "y", "0"}, {"0", "y", "z"}},
                    std::vector<std::vector<std::string>>{{"x", "y", "0"}, {"0", "x", "z"}},
                    std::vector<std::vector<std::string>>{{"x", "y", "0"}, {"y", "z", "x"}}}) {
    BlowupReport b = blowup_criterion(M(R, rows));
    CHECK(b.ok);
    REQUIRE(b.strata.size() == 2);
    CHECK(b.strata[0].codim == 2);
    CHECK(b.strata[1].codim == 3);
  }
}

TEST_CASE("rank strata of (x^d, y)") {
  auto R = make_ring({"x", "y"});
  for (int d = 1; d <= 6; ++d) {
    BlowupReport b = blowup_criterion(M(R, {{"x^" + std::to_string(d), "y"}}));
    CHECK(b.ok);
    CHECK(b.strata.at(0).codim == 2);
  }
}

TEST_CASE("criterion fails for a matrix with a large rank-0 locus") {
  auto R = xyz();
  BlowupReport b = blowup_criterion(M(R, {{"x", "y", "0"}, {"0", "x", "y"}}));
  CHECK_FALSE(b.ok);
}

TEST_CASE("incidence scheme and charts") {
  auto R = xyz();
  auto X = incidence_scheme(M(R, {{"x", "y", "0"}, {"0", "x", "z"}}));
  CHECK(X.proj_vars == std::vector<std::string>{"alpha", "beta", "gamma"});
  auto cs = charts(X);
  REQUIRE(cs.size() == 3);
  // beta = 1: x*alpha + y = 0 and x + z*gamma = 0 solve for y and x.
  CHECK(cs[1].ideal.generators().empty());
  CHECK(cs[1].solved.size() == 2);
  auto S = make_ring({"x", "y"});
  CHECK(projective_names(1, *S) == std::vector<std::string>{"alpha", "beta"});
  auto clash = make_ring({"alpha", "y"});
  CHECK(projective_names(1, *clash) == std::vector<std::string>{"u0", "u1"});
}
