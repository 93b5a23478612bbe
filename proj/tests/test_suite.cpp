#include <doctest.h>

#include "degloci/errors.hpp"
#include "degloci/groebner.hpp"
#include "degloci/json_io.hpp"
#include "degloci/paper_suite.hpp"
#include "degloci/validate.hpp"
#include "support.hpp"

using namespace testing;

namespace {

struct Golden {
  std::vector<std::vector<std::string>> matrix;
  std::string chart_var;
  std::string equation;
};

// Charts of the limit matrices, transcribed.
const std::vector<Golden> kGolden = {
    {{{"x", "y", "0"}, {"0", "y", "z"}}, "alpha", "y*beta + z*gamma = 0"},
    {{{"x", "y", "0"}, {"0", "x", "z"}}, "alpha", "y*beta^2 = z*gamma"},
    {{{"x", "y", "0"}, {"y", "z", "x"}}, "alpha", "y + z*beta = y*beta*gamma"},
    {{{"x", "y", "0"}, {"y", "z", "x"}}, "gamma", "y*beta = (y*alpha + z*beta)*alpha"},
    {{{"x", "y", "0"}, {"z^2", "z", "x"}}, "alpha", "z^2 + z*beta = y*beta*gamma"},
    {{{"x", "y", "0"}, {"z^2", "z", "x"}}, "gamma", "y*beta = (z^2*alpha + z*beta)*alpha"},
    {{{"x", "y", "0"}, {"z^2", "z", "x"}}, "beta", "z^2*alpha + z + x*gamma = 0"},
    {{{"x", "y", "0"}, {"y*z", "z", "x"}}, "alpha", "y*z + z*beta = y*beta*gamma"},
    {{{"x", "y", "0"}, {"y*z", "z", "x"}}, "gamma", "y*beta = (y*alpha + beta)*z*alpha"},
    {{{"x", "y", "0"}, {"y^2", "z", "x"}}, "alpha", "y^2 + z*beta = y*beta*gamma"},
    {{{"x", "y", "0"}, {"y^2", "z", "x"}}, "gamma", "y*beta = (y^2*alpha + z*beta)*alpha"},
    {{{"x", "y", "0"}, {"y^2", "z", "x"}}, "beta", "y^2*alpha + z + x*gamma = 0"},
    {{{"x + z^2", "y", "0"}, {"0", "z", "x"}}, "alpha", "beta*z = gamma*(z^2 + y*beta)"},
    {{{"x + z^2", "y", "0"}, {"0", "z", "x"}}, "gamma", "beta*y = alpha*(beta*z - z^2)"},
};

struct ChartIdeals {
  Ideal full;    // incidence equations with chart_var = 1
  Ideal linear;  // the chart's eliminations var - image
  RingPtr ring;
};

ChartIdeals chart_ideals(const std::vector<std::vector<std::string>>& rows, const std::string& var) {
  auto R = xyz();
  IncidenceScheme X = incidence_scheme(PolyMatrix::parse(R, rows));
  RingPtr C = ring_without(X.ring, {var});
  Substitution one;
  one.assign(var, Poly::constant(X.ring, 1));
  std::vector<Poly> eqs;
  for (const auto& e : X.equations) eqs.push_back(substitute(e, one).embed(C));
  std::size_t j = 0;
  while (X.proj_vars[j] != var) ++j;
  std::vector<Poly> lin;
  for (const auto& s : chart(X, j).solved) lin.push_back(Poly::variable(C, s.var) - s.image.embed(C));
  return {Ideal(C, eqs), Ideal(C, lin), C};
}

Poly equation_on(const std::string& eq, const std::string& var, const RingPtr& C) {
  auto pos = eq.find('=');
  RingPtr full = ring_with(C, {var});
  Poly e = parse_poly(eq.substr(0, pos), full) - parse_poly(eq.substr(pos + 1), full);
  Substitution one;
  one.assign(var, Poly::constant(full, 1));
  return substitute(e, one).embed(C);
}

}  // namespace

TEST_CASE("golden chart equations generate the chart together with the eliminations") {
  for (const auto& g : kGolden) {
    CAPTURE(g.equation);
    ChartIdeals ci = chart_ideals(g.matrix, g.chart_var);
    Poly e = equation_on(g.equation, g.chart_var, ci.ring);
    CHECK(ideal_equal(ci.full, ideal_sum(ci.linear, Ideal(ci.ring, {e}))));
  }
}

TEST_CASE("the printed form of the second case chart is not a chart equation") {
  std::vector<std::vector<std::string>> rows{{"x + z^2", "y", "0"}, {"0", "z", "x"}};
  ChartIdeals ci = chart_ideals(rows, "alpha");
  Poly literal = equation_on("beta*z = gamma*(z^2 + beta*gamma)", "alpha", ci.ring);
  CHECK_FALSE(contains(ci.full, literal));
}

TEST_CASE("genus two pipeline") {
  PipelineReport r = verify_genus2(6);
  CHECK(r.all_pass());
  CHECK(r.summary.total == 6);
  CHECK(r.summary.complete_certificates == 6);
  CHECK(r.summary.max_toric_degree == 6);
  for (const auto& inst : r.instances) {
    REQUIRE(inst.certificate);
    CHECK(validate(*inst.certificate).valid);
  }
  CHECK(verify_genus2(0).summary.total == 0);
}

TEST_CASE("genus three pipeline") {
  PipelineReport r = verify_genus3();
  for (const auto& inst : r.instances) {
    CAPTURE(inst.id);
    CHECK(inst.diffs.empty());
    CHECK(inst.pass);
  }
  CHECK(r.summary.complete_certificates == r.summary.total);
  CHECK(r.summary.elkik_nodes >= 1);
  CHECK(r.summary.max_toric_degree >= 2);
}

TEST_CASE("mutated matrix fails") {
  PipelineReport r = verify_genus3(std::string("g3.mutation"));
  CHECK_FALSE(r.all_pass());
  REQUIRE(r.instances.size() == 1);
  CHECK_FALSE(r.instances[0].diffs.empty());
}

TEST_CASE("catalog lookup") {
  CHECK_THROWS_AS(instance("g3.nonexistent"), UnknownInstance);
  CHECK_THROWS_AS(instance("g2.typeA.dx"), UnknownInstance);
  CHECK(instance("g2.typeA.d9").fitting == std::vector<std::string>{"x^9", "y"});
  auto ids = instance_ids();
  CHECK(std::find(ids.begin(), ids.end(), "g3.mutation") == ids.end());
  auto all = instance_ids(true);
  CHECK(all.back() == "g3.mutation");
}

TEST_CASE("randomized generic trial depends only on the seed") {
  SuiteOptions a, b;
  a.seed = b.seed = 31;
  b.threads = 4;
  auto ra = verify_genus3(std::string("g3.generic.random"), a);
  auto rb = verify_genus3(std::string("g3.generic.random"), b);
  CHECK(ra.all_pass());
  CHECK(to_json(ra).dump() == to_json(rb).dump());
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    SuiteOptions o;
    o.seed = seed;
    CAPTURE(seed);
    CHECK(verify_genus3(std::string("g3.generic.random"), o).all_pass());
  }
}

TEST_CASE("reports do not depend on the thread count") {
  SuiteOptions one, many;
  many.threads = 4;
  many.certify.threads = 2;
  CHECK(to_json(verify_genus3(std::nullopt, one)).dump() == to_json(verify_genus3(std::nullopt, many)).dump());
}

TEST_CASE("case split of the two-three form") {
  auto R = xyz();
  auto split = [&](const std::vector<std::vector<std::string>>& rows) {
    return two_three_split(PolyMatrix::parse(R, rows));
  };
  CHECK(split({{"x + 2*z^2 + z^5", "y", "0"}, {"y^3", "z", "x"}})->branch == TwoThreeBranch::Case2);
  CHECK(split({{"x + z^3", "y", "0"}, {"y*z + y^3", "z", "x"}})->branch == TwoThreeBranch::Case1);
  auto neither = split({{"x + z^3", "y", "0"}, {"y^3 + z^4", "z", "x"}});
  REQUIRE(neither);
  CHECK(neither->branch == TwoThreeBranch::Neither);
  CHECK_FALSE(split({{"x", "y", "0"}, {"y", "z", "x"}}));
  CHECK_FALSE(split({{"x + z", "y", "0"}, {"y^2", "z", "x"}}));

  PaperInstance p;
  p.id = "neither";
  p.vars = {"x", "y", "z"};
  p.matrix = {{"x + z^3", "y", "0"}, {"y^3 + z^4", "z", "x"}};
  InstanceResult r = run_instance(p);
  CHECK_FALSE(r.pass);
  bool flagged = false;
  for (const auto& c : r.checks) flagged = flagged || (c.name == "case split" && !c.ok);
  CHECK(flagged);
}

TEST_CASE("certification does not depend on the truncation degree") {
  // Higher-order terms of h and f are scaled away by the same families. The
  // subcase matrices are limits with h already gone, so only f moves there.
  for (std::string id : {"g3.case2", "g3.step3.ideal", "g3.case1", "g3.subcase1a", "g3.subcase1b"}) {
    bool move_h = id.find("subcase") == std::string::npos;
    PaperInstance base = instance(id);
    for (int extra = 1; extra <= 4; ++extra) {
      PaperInstance p = base;
      std::string zd = "z^" + std::to_string(3 + extra);
      std::string yd = "y^" + std::to_string(2 + extra) + "*z";
      if (move_h) p.matrix[0][0] = "(" + p.matrix[0][0] + ") + " + zd;
      p.matrix[1][0] = "(" + p.matrix[1][0] + ") + " + yd;
      p.fitting.clear();
      for (auto& s : p.chain) s.quoted_family.reset();
      CAPTURE(id);
      CAPTURE(extra);
      InstanceResult r = run_instance(p);
      for (const auto& d : r.diffs) MESSAGE(d);
      CHECK(r.pass);
    }
  }
}
