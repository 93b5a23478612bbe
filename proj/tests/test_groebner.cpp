#include <doctest.h>

#include "degloci/degeneracy.hpp"
#include "degloci/errors.hpp"
#include "degloci/groebner.hpp"
#include "degloci/paper_suite.hpp"
#include "degloci/singularity.hpp"
#include "support.hpp"

using namespace testing;

namespace {

// Plain multivariate division, written against the order only.
struct Divider {
  BoundOrder order;
  Monomial lead(const Poly& f) const {
    Monomial best = f.terms().begin()->first;
    for (const auto& [m, c] : f.terms()) {
      if (order.compare(m, best) > 0) best = m;
    }
    return best;
  }
  Poly remainder(Poly f, const std::vector<Poly>& G) const {
    Poly r(f.ring());
    while (!f.is_zero()) {
      Monomial m = lead(f);
      Rational c = f.coefficient(m);
      bool divided = false;
      for (const auto& g : G) {
        Monomial lg = lead(g);
        if (!lg.divides(m)) continue;
        f -= Poly::term(f.ring(), m / lg, c / g.coefficient(lg)) * g;
        divided = true;
        break;
      }
      if (!divided) {
        r += Poly::term(f.ring(), m, c);
        f -= Poly::term(f.ring(), m, c);
      }
    }
    return r;
  }
  bool buchberger(const std::vector<Poly>& G) const {
    for (std::size_t i = 0; i < G.size(); ++i) {
      for (std::size_t j = i + 1; j < G.size(); ++j) {
        Monomial li = lead(G[i]), lj = lead(G[j]), l = lcm(li, lj);
        Poly s = Poly::term(G[i].ring(), l / li, 1 / G[i].coefficient(li)) * G[i] -
                 Poly::term(G[j].ring(), l / lj, 1 / G[j].coefficient(lj)) * G[j];
        if (!remainder(s, G).is_zero()) return false;
      }
    }
    return true;
  }
};

std::vector<Ideal> catalog_ideals() {
  std::vector<Ideal> out;
  for (const auto& id : instance_ids(true)) {
    PolyMatrix phi = instance(id).parsed();
    out.push_back(fitting_ideal(phi));
    out.push_back(rank_stratum_ideal(phi, static_cast<int>(phi.rows())));
    out.push_back(incidence_ideal(phi));
  }
  return out;
}

}  // namespace

TEST_CASE("twisted cubic by lex elimination") {
  auto R = make_ring({"t", "x", "y", "z"});
  Ideal I(R, Ps({"x - t", "y - t^2", "z - t^3"}, R), MonomialOrder::lex());
  Ideal J = eliminate(I, {"t"});
  auto S = J.ring();
  Ideal expected(S, Ps({"y - x^2", "z - x*y", "x*z - y^2"}, S));
  CHECK(ideal_equal(J, expected));
  CHECK(dimension(J) == 1);
}

TEST_CASE("cyclic four") {
  auto R = make_ring({"a", "b", "c", "d"});
  Ideal I(R, Ps({"a + b + c + d", "a*b + b*c + c*d + d*a", "a*b*c + b*c*d + c*d*a + d*a*b", "a*b*c*d - 1"}, R));
  CHECK(dimension(I) == 1);
  CHECK(dimension(I.with_order(MonomialOrder::lex())) == 1);
}

TEST_CASE("unit ideal and membership") {
  auto R = xyz();
  CHECK(is_unit_ideal(Ideal(R, Ps({"x", "x - 1"}, R))));
  Ideal I(R, Ps({"x*y", "x*z", "y*z"}, R));
  CHECK(contains(I, P("x*y*z + x^2*y", R)));
  CHECK_FALSE(contains(I, P("x + y", R)));
  CHECK(dimension(I) == 1);
  CHECK(codimension(Ideal(R, Ps({"1"}, R))) == 4);
}

TEST_CASE("reduction budget") {
  auto R = make_ring({"a", "b", "c", "d"});
  Ideal I(R, Ps({"a + b + c + d", "a*b + b*c + c*d + d*a", "a*b*c + b*c*d + c*d*a + d*a*b", "a*b*c*d - 1"}, R));
  GroebnerOptions tiny;
  tiny.max_reductions = 3;
  CHECK_THROWS_AS(groebner_basis(I, tiny), BudgetExceeded);
}

TEST_CASE("catalog bases pass an independent Buchberger check and agree across orders") {
  for (const Ideal& I : catalog_ideals()) {
    const auto& R = *I.ring();
    Ideal lex = I.with_order(MonomialOrder::lex());
    const auto& G = I.basis();
    const auto& H = lex.basis();
    Divider dg{BoundOrder(I.order(), R)}, dh{BoundOrder(lex.order(), R)};
    CAPTURE(I.generator_strings());
    CHECK(dg.buchberger(G));
    CHECK(dh.buchberger(H));
    CHECK(satisfies_buchberger_criterion(G, I.order()));
    // Same ideal: each basis reduces to zero modulo the other.
    for (const auto& g : G) CHECK(dh.remainder(g, H).is_zero());
    for (const auto& h : H) CHECK(dg.remainder(h, G).is_zero());
    for (const auto& f : I.generators()) CHECK(dg.remainder(f, G).is_zero());
    CHECK(dimension(I) == dimension(lex));
  }
}

TEST_CASE("random ideals: reduced bases are canonical [property]") {
  auto R = xyz();
  std::mt19937_64 gen(99);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Poly> gens;
    for (int k = 0; k < 2 + trial % 2; ++k) gens.push_back(random_poly(gen, R, 3, 1));
    Ideal I(R, gens);
    auto G = reduced_groebner_basis(gens, MonomialOrder::degrevlex());
    std::vector<Poly> shuffled(gens.rbegin(), gens.rend());
    shuffled.push_back(gens[0] * gens[1] + gens.back());
    CHECK(reduced_groebner_basis(shuffled, MonomialOrder::degrevlex()) == G);
    Divider d{BoundOrder(MonomialOrder::degrevlex(), *R)};
    CHECK(d.buchberger(G));
    CHECK(dimension(I) == dimension(I.with_order(MonomialOrder::lex())));
  }
}
