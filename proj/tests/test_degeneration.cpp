#include <doctest.h>

#include "degloci/degeneration.hpp"
#include "degloci/errors.hpp"
#include "degloci/singularity.hpp"
#include "degloci/validate.hpp"
#include "support.hpp"

using namespace testing;

namespace {

PolyMatrix M(const RingPtr& R, const std::vector<std::vector<std::string>>& rows) { return PolyMatrix::parse(R, rows); }

std::vector<Poly> tpowers(const RingPtr& R, const std::vector<int>& ks) {
  std::vector<Poly> out;
  for (int k : ks) out.push_back(t_monomial(R, k));
  return out;
}

const std::map<std::string, int> kUnit{{"x", 1}, {"y", 1}, {"z", 1}};

}  // namespace

TEST_CASE("quadratic perturbation degenerates to its linear part") {
  auto R = xyz();
  PolyMatrix origin = M(R, {{"x", "y + z^2", "0"}, {"0", "y", "z + x^2"}});
  auto rows = tpowers(R, {-1, -1}), cols = tpowers(R, {0, 0, 0});
  MatrixFamily F = build_family(origin, kUnit, rows, cols);
  CHECK(F.phi_t == M(F.phi_t.ring(), {{"x", "y + t*z^2", "0"}, {"0", "y", "z + t*x^2"}}));
  PolyMatrix limit = fiber0(F);
  CHECK(limit == M(R, {{"x", "y", "0"}, {"0", "y", "z"}}));
  EquivalenceWitness W{kUnit, rows, cols, std::nullopt, std::nullopt, std::nullopt};
  CHECK(verify_isotriviality(F, W));
  FlatnessReport fl = verify_flat_degeneration(F);
  CHECK(fl.ok);
  CHECK(fl.total_dim == fl.fiber0_dim + 1);
  Certificate node = elkik_node(F, W, fl, certify_matrix(limit));
  CHECK(node.kind == CertKind::Elkik);
  CHECK(node.complete());
  CHECK(validate(node).valid);
}

TEST_CASE("scaling witnesses verify and perturbed ones do not [property]") {
  auto R = xyz();
  std::mt19937_64 gen(11);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::vector<Poly>> rows(2);
    for (auto& row : rows) {
      for (int j = 0; j < 3; ++j) row.push_back(random_poly(gen, R, 2, 1) + random_poly(gen, R, 1, 2));
    }
    PolyMatrix origin(R, rows);
    std::map<std::string, int> w{{"x", 1 + int(gen() % 2)}, {"y", 1}, {"z", 1 + int(gen() % 2)}};
    auto rc = tpowers(R, {0, 0}), cc = tpowers(R, {0, 0, 0});
    MatrixFamily F = build_family(origin, w, rc, cc);
    REQUIRE(verify_isotriviality(F, EquivalenceWitness{w, rc, cc, std::nullopt, std::nullopt, std::nullopt}));
    auto w2 = w;
    w2["y"] = 2;
    bool y_occurs = false;
    for (const auto& row : rows) {
      for (const auto& e : row) y_occurs = y_occurs || e.involves(1);
    }
    if (!y_occurs) continue;
    ++checked;
    EquivalenceWitness bad{w2, rc, cc, std::nullopt, std::nullopt, std::nullopt};
    REQUIRE_FALSE(verify_isotriviality(F, bad));
    REQUIRE_FALSE(isotriviality_failure(F, bad).empty());
  }
  CHECK(checked > 100);
}

TEST_CASE("surviving poles are rejected") {
  auto R = xyz();
  PolyMatrix origin = M(R, {{"x", "y", "0"}, {"y", "z", "x + 1"}});
  CHECK_THROWS_AS(build_family(origin, kUnit, tpowers(R, {-1, -1}), tpowers(R, {0, 0, 0})), PoleError);
}

TEST_CASE("elkik node refuses a wrong limit certificate") {
  auto R = xyz();
  PolyMatrix origin = M(R, {{"x", "y", "0"}, {"y + z^2", "x + y^2", "z"}});
  auto rows = tpowers(R, {-1, -1}), cols = tpowers(R, {0, 0, 0});
  MatrixFamily F = build_family(origin, kUnit, rows, cols);
  EquivalenceWitness W{kUnit, rows, cols, std::nullopt, std::nullopt, std::nullopt};
  Certificate other = certify_matrix(M(R, {{"x", "y", "0"}, {"0", "y", "z"}}));
  CHECK_THROWS_AS(elkik_node(F, W, verify_flat_degeneration(F), other), PreconditionFailed);
  EquivalenceWitness wrong{{{"x", 2}, {"y", 1}, {"z", 1}}, rows, cols, std::nullopt, std::nullopt, std::nullopt};
  CHECK_THROWS_AS(elkik_node(F, wrong, verify_flat_degeneration(F), certify_matrix(fiber0(F))),
                  PreconditionFailed);
}

TEST_CASE("constant equivalence") {
  auto R = xyz();
  PolyMatrix phi1 = M(R, {{"x", "y", "0"}, {"0", "y", "z"}});
  PolyMatrix moved = M(R, {{"0", "2*y", "2*z"}, {"x", "y + x", "0"}});
  auto pq = find_constant_equivalence(moved, phi1);
  REQUIRE(pq);
  CHECK(PolyMatrix(R, matmul(matmul(pq->first, moved.entries()), pq->second)) == phi1);
  CHECK_FALSE(find_constant_equivalence(M(R, {{"x", "y", "0"}, {"y", "z", "x"}}), phi1));
}
