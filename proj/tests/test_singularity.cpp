#include <doctest.h>

#include "degloci/errors.hpp"
#include "degloci/singularity.hpp"
#include "degloci/validate.hpp"
#include "support.hpp"

using namespace testing;

namespace {

Ideal I(const RingPtr& R, const std::vector<std::string>& gens) { return Ideal(R, Ps(gens, R)); }

}  // namespace

TEST_CASE("smoothness via the Jacobian criterion") {
  auto R = xyz();
  CHECK(is_smooth(I(R, {"x - y^2"})));
  CHECK(is_smooth(I(R, {"x - y^2", "z - x*y"})));
  CHECK_FALSE(is_smooth(I(R, {"x*y - z^2"})));
  CHECK_FALSE(is_smooth(I(R, {"x^2 + y^3"})));
}

TEST_CASE("binomial and lemma forms") {
  auto R = xyz();
  auto b = match_binomial_form(P("x*y - z^3", R));
  REQUIRE(b);
  CHECK(b->u == "x");
  CHECK(b->v == "y");
  CHECK(b->M == P("z^3", R));
  CHECK_FALSE(match_binomial_form(P("x*y - z^3 - z^4", R)));
  CHECK(toric_normal(P("x*y - z^2", R)));
  auto R4 = make_ring({"x", "y", "z", "w"});
  CHECK(toric_normal(P("x*y - z^2*w^3", R4)));
  CHECK_THROWS_AS(toric_normal(P("x^2 - y^2*z", R)), FormError);
  CHECK(match_lemma_form(P("y*z - y*x - z^2*x", R)));
}

TEST_CASE("certificates for catalog singularities") {
  auto R = xyz();
  Certificate a = certify_ideal(I(R, {"x*y - z^4"}));
  CHECK(a.kind == CertKind::NormalToric);
  CHECK(a.max_toric_degree() == 4);
  CHECK(validate(a).valid);
  Certificate s = certify_ideal(I(R, {"x + y*z"}));
  CHECK(s.kind == CertKind::Smooth);
  Certificate f = certify_ideal(I(R, {"y*z - y*x - z^2*x"}));
  CHECK(f.kind == CertKind::FormMatch);
  CHECK(f.complete());
  CHECK(validate(f).valid);
  CHECK(f.count(CertKind::Elkik) == 1);
}

TEST_CASE("outside the catalog yields an Unknown leaf") {
  auto R = make_ring({"x", "y", "z", "w"});
  Certificate c = certify_ideal(I(R, {"x*w - y^2 + z^3 + w^5"}));
  CHECK(c.kind == CertKind::Unknown);
  CHECK_FALSE(c.complete());
  ValidationReport v = validate(c);
  CHECK(v.valid);
  CHECK_FALSE(v.complete);
}

TEST_CASE("validation rejects tampered certificates") {
  auto R = xyz();
  Certificate a = certify_ideal(I(R, {"x*y - z^4"}));
  Certificate bad = a;
  std::get<ToricWitness>(bad.witness).match.M = P("z^3", R);
  CHECK_FALSE(validate(bad).valid);

  Certificate s = certify_ideal(I(R, {"x + y*z"}));
  Certificate lie = s;
  lie.subject = I(R, {"x*y - z^2"});
  CHECK_FALSE(validate(lie).valid);
}

TEST_CASE("matrix certificates") {
  auto R = xyz();
  PolyMatrix mu = PolyMatrix::parse(R, {{"x", "y", "0"}, {"y", "z", "x"}});
  Certificate c = certify_matrix(mu);
  CHECK(c.kind == CertKind::ChartCover);
  CHECK(c.children.size() == 3);
  CHECK(c.complete());
  CHECK(validate(c).valid);

  Certificate tampered = c;
  std::get<ChartCoverWitness>(tampered.witness).solved.at(0).at(0).image += Poly::constant(R, 1).embed(
      std::get<ChartCoverWitness>(tampered.witness).solved.at(0).at(0).image.ring());
  CHECK_FALSE(validate(tampered).valid);

  PolyMatrix mutated = PolyMatrix::parse(R, {{"x", "y", "0"}, {"y", "z", "x + y"}});
  CHECK_FALSE(certify_matrix(mutated).complete());
}

TEST_CASE("parallel chart certification is deterministic") {
  auto R = xyz();
  PolyMatrix phi = PolyMatrix::parse(R, {{"x", "y", "0"}, {"0", "x", "z"}});
  CertifyOptions one, many;
  many.threads = 4;
  Certificate a = certify_matrix(phi, one), b = certify_matrix(phi, many);
  CHECK(a.kind == b.kind);
  REQUIRE(a.children.size() == b.children.size());
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    CHECK(a.children[i].kind == b.children[i].kind);
    CHECK(a.children[i].subject.generator_strings() == b.children[i].subject.generator_strings());
  }
}
