#include <doctest.h>

#include <algorithm>
#include <random>

#include "degloci/errors.hpp"
#include "degloci/monomial_closure.hpp"
#include "degloci/rational.hpp"
#include "closure_oracle.hpp"

using namespace degloci;

namespace {

// Newton polyhedron membership in the plane: the smallest second coordinate
// reachable in conv(gens) left of a[0] is attained at a generator or where
// a segment between two generators crosses the line x = a[0].
bool planar_oracle(const std::vector<Exponent>& gens, const Exponent& a) {
  for (const auto& g : gens) {
    if (g[0] <= a[0] && g[1] <= a[1]) return true;
  }
  for (const auto& p : gens) {
    for (const auto& q : gens) {
      if (!(p[0] < a[0] && a[0] < q[0])) continue;
      Rational y = Rational(p[1] * (q[0] - a[0]) + q[1] * (a[0] - p[0]), q[0] - p[0]);
      if (Rational(a[1]) >= y) return true;
    }
  }
  return false;
}

std::vector<Exponent> naive_power(const std::vector<Exponent>& gens, int k) {
  std::vector<Exponent> out{Exponent(gens.front().size(), 0)};
  for (int step = 0; step < k; ++step) {
    std::vector<Exponent> next;
    for (const auto& a : out) {
      for (const auto& g : gens) {
        Exponent s(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + g[i];
        next.push_back(s);
      }
    }
    out = std::move(next);
  }
  return out;
}

MonomialIdeal random_ideal(std::mt19937_64& gen, std::size_t n, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp);
  std::vector<Exponent> gens;
  int count = 1 + static_cast<int>(gen() % 4);
  for (int k = 0; k < count; ++k) {
    Exponent a(n);
    for (auto& x : a) x = e(gen);
    if (std::all_of(a.begin(), a.end(), [](int x) { return x == 0; })) a[0] = 1;
    gens.push_back(a);
  }
  return MonomialIdeal(gens);
}

}  // namespace

TEST_CASE("closedness of the quadratic ideals") {
  MonomialIdeal I1({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
  MonomialIdeal I2({{2, 0, 0}, {1, 0, 1}, {0, 1, 1}});
  for (const auto& I : {I1, I2}) {
    CHECK(is_integrally_closed(I));
    CHECK(is_integrally_closed(power(I, 2)));
    CHECK(oracle::integrally_closed(I));
    CHECK(oracle::integrally_closed(power(I, 2)));
    CHECK(rrv_normal(I));
  }
  MonomialIdeal control({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  CHECK_FALSE(is_integrally_closed(control));
  CHECK_FALSE(oracle::integrally_closed(control));
  CHECK(integral_closure(control).contains({1, 1, 0}));
  CHECK_FALSE(rrv_normal(control));
}

TEST_CASE("input validation") {
  CHECK_THROWS(MonomialIdeal({}));
  CHECK_THROWS(MonomialIdeal({{1, 0}, {1}}));
  CHECK_THROWS(MonomialIdeal({{-1, 2}}));
  CHECK_THROWS_AS(rrv_normal(MonomialIdeal({{1, 0}, {0, 1}})), UnsupportedDimension);
}

TEST_CASE("minimal generators") {
  MonomialIdeal I({{2, 1}, {1, 0}, {0, 3}, {1, 3}});
  CHECK(I.generators() == std::vector<Exponent>{{0, 3}, {1, 0}});
}

TEST_CASE("powers agree with naive products [property]") {
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 100; ++trial) {
    MonomialIdeal I = random_ideal(gen, 3, 3);
    int k = 1 + trial % 3;
    CHECK(power(I, k) == MonomialIdeal(naive_power(I.generators(), k)));
  }
}

TEST_CASE("closure in the plane matches the polygon oracle [property]") {
  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 500; ++trial) {
    MonomialIdeal I = random_ideal(gen, 2, 6);
    MonomialIdeal C = integral_closure(I);
    for (int a = 0; a <= 7; ++a) {
      for (int b = 0; b <= 7; ++b) {
        Exponent e{a, b};
        REQUIRE(C.contains(e) == planar_oracle(I.generators(), e));
        REQUIRE(in_newton_polyhedron(I, e) == planar_oracle(I.generators(), e));
      }
    }
    REQUIRE(integral_closure(C) == C);
  }
}

TEST_CASE("closure is idempotent and contains powers' roots [property]") {
  std::mt19937_64 gen(23);
  for (int trial = 0; trial < 500; ++trial) {
    MonomialIdeal I = random_ideal(gen, 3, 3);
    MonomialIdeal C = integral_closure(I);
    REQUIRE(integral_closure(C) == C);
    REQUIRE(is_integrally_closed(C));
    for (const auto& g : I.generators()) REQUIRE(C.contains(g));
    // x^a with x^(ka) in I^k is integral over I.
    for (int k = 2; k <= 3; ++k) {
      MonomialIdeal Ik = power(I, k);
      for (int a = 0; a <= 3; ++a) {
        for (int b = 0; b <= 3; ++b) {
          for (int c = 0; c <= 3; ++c) {
            if (Ik.contains({k * a, k * b, k * c})) REQUIRE(C.contains({a, b, c}));
          }
        }
      }
    }
  }
}

TEST_CASE("polyhedron membership matches vertex enumeration in three variables [property]") {
  std::mt19937_64 gen(41);
  for (int trial = 0; trial < 200; ++trial) {
    MonomialIdeal I = random_ideal(gen, 3, 4);
    for (int a = 0; a <= 4; ++a) {
      for (int b = 0; b <= 4; ++b) {
        for (int c = 0; c <= 4; ++c) {
          Exponent e{a, b, c};
          REQUIRE(in_newton_polyhedron(I, e) == oracle::in_newton_polyhedron(I.generators(), e));
        }
      }
    }
    REQUIRE(is_integrally_closed(I) == oracle::integrally_closed(I));
  }
}
