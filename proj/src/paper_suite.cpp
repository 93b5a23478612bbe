#include "degloci/paper_suite.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <future>
#include <random>

#include "degloci/degeneration.hpp"
#include "degloci/errors.hpp"
#include "degloci/parse.hpp"
#include "degloci/validate.hpp"

namespace degloci {

namespace {

using Rows = std::vector<std::vector<std::string>>;

const Rows kPhi1 = {{"x", "y", "0"}, {"0", "y", "z"}};
const Rows kPhi2 = {{"x", "y", "0"}, {"0", "x", "z"}};

const std::vector<std::string> kXYZ = {"x", "y", "z"};

ExpectedChart ch(std::string var, std::string eq, CertKind kind, std::string note = "") {
  return ExpectedChart{std::move(var), std::move(eq), kind, std::move(note)};
}

DegenerationStep scaling(std::string label, std::map<std::string, int> w, std::vector<int> rows, std::vector<int> cols,
                         std::optional<Rows> quoted = std::nullopt) {
  DegenerationStep s;
  s.kind = DegenerationStep::Kind::Scaling;
  s.label = std::move(label);
  s.weights = std::move(w);
  s.row_powers = std::move(rows);
  s.col_powers = std::move(cols);
  s.quoted_family = std::move(quoted);
  return s;
}

DegenerationStep equivalence(std::string label, std::map<std::string, std::string> change, Rows target) {
  DegenerationStep s;
  s.kind = DegenerationStep::Kind::ConstantEquivalence;
  s.label = std::move(label);
  s.linear_change = std::move(change);
  s.target = std::move(target);
  return s;
}

std::vector<ExpectedChart> phi1_charts() {
  return {ch("alpha", "y*beta + z*gamma = 0", CertKind::NormalToric),
          ch("beta", "", CertKind::NormalToric),
          ch("gamma", "", CertKind::NormalToric)};
}

std::vector<ExpectedChart> phi2_charts() {
  return {ch("alpha", "y*beta^2 = z*gamma", CertKind::NormalToric),
          ch("beta", "", CertKind::Smooth),
          ch("gamma", "", CertKind::NormalToric)};
}

// Linear change (x, y) -> new coordinates in which x*b - y*a becomes c*x*y
// (distinct rational roots) or c*x^2 (double root). Empty when the quadratic
// form is zero or irreducible over Q.
struct GenericReduction {
  std::map<std::string, std::string> change;
  Rows target;
};

std::optional<GenericReduction> reduce_generic(const Rational& a1, const Rational& a2, const Rational& b1,
                                               const Rational& b2) {
  // q = x*(b1 x + b2 y) - y*(a1 x + a2 y) = A x^2 + B x y + C y^2.
  Rational A = b1, B = b2 - a1, C = -a2;
  if (A == 0 && B == 0 && C == 0) return std::nullopt;
  // Linear forms l1, l2 as (coef of x, coef of y).
  std::pair<Rational, Rational> l1, l2;
  bool double_root = false;
  if (A != 0) {
    Rational disc = B * B - 4 * A * C;
    if (disc < 0) return std::nullopt;
    mpz_class num = disc.get_num(), den = disc.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
    Rational root(sqrt(num), sqrt(den));
    root.canonicalize();
    Rational r1 = (-B + root) / (2 * A), r2 = (-B - root) / (2 * A);
    l1 = {1, -r1};
    if (r1 == r2) {
      double_root = true;
      l2 = {0, 1};
    } else {
      l2 = {1, -r2};
    }
  } else if (B != 0) {
    l1 = {0, 1};
    l2 = {B, C};
  } else {
    l1 = {0, 1};
    l2 = {1, 0};
    double_root = true;
  }
  // Old coordinates in terms of X = l1, Y = l2.
  Rational det = l1.first * l2.second - l1.second * l2.first;
  Rational i00 = l2.second / det, i01 = -l1.second / det, i10 = -l2.first / det, i11 = l1.first / det;
  auto R = make_ring(kXYZ);
  Poly X = Poly::variable(R, "x"), Y = Poly::variable(R, "y");
  GenericReduction g;
  g.change["x"] = (X * i00 + Y * i01).str();
  g.change["y"] = (X * i10 + Y * i11).str();
  g.target = double_root ? kPhi2 : kPhi1;
  return g;
}

PaperInstance generic_case(const std::string& id, const Rational& a1, const Rational& a2, const Rational& b1,
                           const Rational& b2) {
  auto R = make_ring(kXYZ);
  Poly x = Poly::variable(R, "x"), y = Poly::variable(R, "y");
  PaperInstance p;
  p.id = id;
  p.vars = kXYZ;
  p.matrix = {{"x", "y", "0"}, {(x * a1 + y * a2).str(), (x * b1 + y * b2).str(), "z"}};
  p.citation = "linear model ((x, y, 0), (a, b, z)) with (a, b) not proportional to (x, y) modulo z";
  auto g = reduce_generic(a1, a2, b1, b2);
  if (g) {
    p.chain.push_back(equivalence("change of variables and constant row/column operations", g->change, g->target));
    p.charts = g->target == kPhi1 ? phi1_charts() : phi2_charts();
  } else {
    p.note = "x*b - y*a does not split over Q";
  }
  return p;
}

PaperInstance random_generic(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  auto draw = [&] { return Rational(static_cast<long>(gen() % 7) - 3); };
  for (int attempt = 1; attempt <= 1000; ++attempt) {
    Rational a1 = draw(), a2 = draw(), b1 = draw(), b2 = draw();
    if (!reduce_generic(a1, a2, b1, b2)) continue;
    PaperInstance p = generic_case("g3.generic.random", a1, a2, b1, b2);
    p.note = "seed " + std::to_string(seed) + ", draw " + std::to_string(attempt) +
             " (draws with x*b - y*a irreducible over Q or zero are skipped)";
    return p;
  }
  throw Error("no splitting quadratic form in 1000 draws");
}

PaperInstance genus2(int d) {
  PaperInstance p;
  p.id = "g2.typeA.d" + std::to_string(d);
  p.vars = {"x", "y"};
  std::string xd = d == 1 ? "x" : "x^" + std::to_string(d);
  p.matrix = {{xd, "y"}};
  p.fitting = {xd, "y"};
  CertKind k = d == 1 ? CertKind::Smooth : CertKind::NormalToric;
  p.charts = {ch("alpha", xd + " + y*beta = 0", k), ch("beta", "", CertKind::Smooth)};
  p.citation = "local model (x^d, y): the blow-up is x^d = y*t, a type A singularity";
  return p;
}

std::vector<PaperInstance> genus3_catalog(std::uint64_t seed) {
  std::vector<PaperInstance> out;
  auto add = [&](PaperInstance p) { out.push_back(std::move(p)); };

  {
    PaperInstance p;
    p.id = "g3.quadratic.phi1";
    p.vars = kXYZ;
    p.matrix = kPhi1;
    p.fitting = {"x*z", "y*z", "x*y"};
    p.charts = phi1_charts();
    p.citation = "I_1 = (xz, yz, xy): normal toric hypersurfaces on the standard opens";
    add(p);
  }
  {
    PaperInstance p;
    p.id = "g3.quadratic.phi2";
    p.vars = kXYZ;
    p.matrix = kPhi2;
    p.fitting = {"x*z", "y*z", "x^2"};
    p.charts = phi2_charts();
    p.citation = "I_2 = (xz, yz, x^2): y*beta^2 = z*gamma over alpha = 1";
    add(p);
  }
  {
    PaperInstance p;
    p.id = "g3.subcase2b";
    p.vars = kXYZ;
    p.matrix = {{"x", "y", "0"}, {"y", "z", "x"}};
    p.charts = {ch("alpha", "y + z*beta = y*beta*gamma", CertKind::Smooth),
                ch("beta", "", CertKind::Smooth),
                ch("gamma", "y*beta = (y*alpha + z*beta)*alpha", CertKind::FormMatch)};
    p.citation = "mu = ((x, y, 0), (y, z, x)); the open beta = 1 is smooth";
    add(p);
  }
  {
    PaperInstance p;
    p.id = "g3.subcase2b.scaled";
    p.vars = kXYZ;
    p.matrix = {{"x", "y", "0"}, {"3*y", "z", "x"}};
    p.chain = {equivalence("rescale the second row, the last column and z", {{"z", "3*z"}},
                           {{"x", "y", "0"}, {"y", "z", "x"}})};
    p.charts = {ch("alpha", "y + z*beta = y*beta*gamma", CertKind::Smooth),
                ch("beta", "", CertKind::Smooth),
                ch("gamma", "y*beta = (y*alpha + z*beta)*alpha", CertKind::FormMatch)};
    p.citation = "((x, y, 0), (c*y, z, x)) with c != 0, here c = 3";
    add(p);
  }
  {
    PaperInstance p;
    p.id = "g3.subcase2a";
    p.vars = kXYZ;
    p.matrix = {{"x", "y", "0"}, {"z", "0", "x"}};
    p.fitting = {"x^2", "x*y", "y*z"};
    p.charts = {ch("alpha", "", CertKind::Smooth), ch("beta", "", CertKind::NormalToric),
                ch("gamma", "", CertKind::NormalToric)};
    p.citation = "((x, y, 0), (z, 0, x)): degeneracy ideal of the form (xz, yz, q(x, y)) after renaming";
    add(p);
  }
  {
    // b = 2x + 3y + 5z; row and column operations plus y -> y + 5x, z -> z + 3x.
    PaperInstance p;
    p.id = "g3.subcase2a.general";
    p.vars = kXYZ;
    p.matrix = {{"x", "y", "0"}, {"z", "2*x + 3*y + 5*z", "x"}};
    p.chain = {equivalence("elementary operations and a change of variables", {{"y", "y + 5*x"}, {"z", "z + 3*x"}},
                           {{"x", "y", "0"}, {"z", "0", "x"}})};
    p.charts = {ch("alpha", "", CertKind::Smooth), ch("beta", "", CertKind::NormalToric),
                ch("gamma", "", CertKind::NormalToric)};
    p.citation = "((x, y, 0), (z, ax + by + cz, x)) reduced to ((x, y, 0), (z, 0, x))";
    add(p);
  }

  add(generic_case("g3.generic.yx", 0, 1, 1, 0));
  add(generic_case("g3.generic.x_xy", 1, 0, 1, 1));
  add(random_generic(seed));
  {
    PaperInstance p;
    p.id = "g3.generic.higher";
    p.vars = kXYZ;
    p.matrix = {{"x", "y", "0"}, {"y + z^2", "x + y^2", "z"}};
    p.chain = {scaling("rescaling the variables: t^-1 * phi(t x, t y, t z)", {{"x", 1}, {"y", 1}, {"z", 1}},
                       {-1, -1}, {0, 0, 0}),
               equivalence("change of variables and constant row/column operations",
                           reduce_generic(0, 1, 1, 0)->change, kPhi1)};
    p.charts = phi1_charts();
    p.citation = "a, b with higher order terms degenerate to the matrix of linear terms";
    add(p);
  }

  {
    PaperInstance p;
    p.id = "g3.step3.ideal";
    p.vars = kXYZ;
    // h = z^2, f = y^2 + y*z.
    p.matrix = {{"x + z^2", "y", "0"}, {"-y^2 - y*z", "z", "x"}};
    p.fitting = {"x*(x + z^2)", "x*y", "(x + z^2)*z + y*(y^2 + y*z)"};
    p.chain = {scaling("t^-2 h(t z), f(t^3 y, t z)", {{"x", 2}, {"y", 3}, {"z", 1}}, {-2, 0}, {0, -1, -2})};
    p.charts = {ch("alpha", "beta*z = gamma*(z^2 + y*beta)", CertKind::FormMatch),
                ch("beta", "", CertKind::Smooth),
                ch("gamma", "beta*y = alpha*(beta*z - z^2)", CertKind::FormMatch)};
    p.citation = "ideal (x(x+h), xy, (x+h)z + yf) as the degeneracy ideal of ((x+h, y, 0), (-f, z, x))";
    add(p);
  }

  {
    PaperInstance p;
    p.id = "g3.case1";
    p.vars = kXYZ;
    p.matrix = {{"x + z^3", "y", "0"}, {"y^2 + z^2", "z", "x"}};
    p.chain = {scaling("x + t^-2 h(t z), t^-2 f(t y, t z)", {{"x", 2}, {"y", 1}, {"z", 1}}, {-2, -2}, {0, 1, 0},
                       Rows{{"x + t*z^3", "y", "0"}, {"y^2 + z^2", "z", "x"}}),
               scaling("t^-2 f_2(t^2 y, t z)", {{"x", 3}, {"y", 2}, {"z", 1}}, {-3, -2}, {0, 1, -1},
                       Rows{{"x", "y", "0"}, {"t^2*y^2 + z^2", "z", "x"}})};
    p.charts = {ch("alpha", "z^2 + z*beta = y*beta*gamma", CertKind::FormMatch),
                ch("beta", "z^2*alpha + z + x*gamma = 0", CertKind::Smooth),
                ch("gamma", "y*beta = (z^2*alpha + z*beta)*alpha", CertKind::FormMatch)};
    p.citation = "h in m^3, f_2 != 0: reduce to h = 0, f = f_2, then to f_2 = z^2";
    add(p);
  }
  {
    PaperInstance p;
    p.id = "g3.subcase1a";
    p.vars = kXYZ;
    p.matrix = {{"x", "y", "0"}, {"y^2 + y*z + z^2", "z", "x"}};
    p.chain = {scaling("t^-2 f_2(t^2 y, t z)", {{"x", 3}, {"y", 2}, {"z", 1}}, {-3, -2}, {0, 1, -1},
                       Rows{{"x", "y", "0"}, {"t^2*y^2 + t*y*z + z^2", "z", "x"}})};
    p.charts = {ch("alpha", "z^2 + z*beta = y*beta*gamma", CertKind::FormMatch),
                ch("beta", "z^2*alpha + z + x*gamma = 0", CertKind::Smooth),
                ch("gamma", "y*beta = (z^2*alpha + z*beta)*alpha", CertKind::FormMatch)};
    p.citation = "coefficient of z^2 in f_2 nonzero";
    add(p);
  }
  {
    PaperInstance p;
    p.id = "g3.subcase1b";
    p.vars = kXYZ;
    p.matrix = {{"x", "y", "0"}, {"y^2 + y*z", "z", "x"}};
    p.chain = {scaling("t^-3 f_2(t^2 y, t z)", {{"x", 4}, {"y", 2}, {"z", 1}}, {-4, -3}, {0, 2, -1},
                       Rows{{"x", "y", "0"}, {"t*y^2 + y*z", "z", "x"}})};
    p.charts = {ch("alpha", "y*z + z*beta = y*beta*gamma", CertKind::FormMatch),
                ch("beta", "(y*alpha + 1)*z = -x*gamma", CertKind::Smooth,
                   "with y = -x*alpha on this chart the hypersurface is smooth"),
                ch("gamma", "y*beta = (y*alpha + beta)*z*alpha", CertKind::FormMatch)};
    p.citation = "f_2 = a*y*z + b*y^2 with a != 0";
    add(p);
  }
  {
    PaperInstance p;
    p.id = "g3.subcase1c";
    p.vars = kXYZ;
    p.matrix = {{"x", "y", "0"}, {"y^2", "z", "x"}};
    p.charts = {ch("alpha", "y^2 + z*beta = y*beta*gamma", CertKind::FormMatch),
                ch("beta", "y^2*alpha + z + x*gamma = 0", CertKind::Smooth),
                ch("gamma", "y*beta = (y^2*alpha + z*beta)*alpha", CertKind::FormMatch)};
    p.citation = "f_2 = c*y^2 with c != 0, normalized to c = 1";
    add(p);
  }
  {
    PaperInstance p;
    p.id = "g3.case2";
    p.vars = kXYZ;
    p.matrix = {{"x + z^2 + z^3", "y", "0"}, {"y^2 + y*z", "z", "x"}};
    p.chain = {scaling("x + t^-2 h(t z), f(t^3 y, t z)", {{"x", 2}, {"y", 3}, {"z", 1}}, {-2, 0}, {0, -1, -2},
                       Rows{{"x + z^2 + t*z^3", "y", "0"}, {"t^6*y^2 + t^4*y*z", "z", "x"}})};
    p.charts = {ch("alpha", "beta*z = gamma*(z^2 + y*beta)", CertKind::FormMatch,
                   "the printed form reads gamma*(z^2 + beta*gamma); the incidence equations give y*beta"),
                ch("beta", "", CertKind::Smooth),
                ch("gamma", "beta*y = alpha*(beta*z - z^2)", CertKind::FormMatch)};
    p.citation = "h(z) = c*z^2 + ...: reduce to h = z^2, f = 0";
    add(p);
  }
  {
    PaperInstance p;
    p.id = "g3.mutation";
    p.vars = kXYZ;
    p.matrix = {{"x", "y", "0"}, {"y", "z", "x + y"}};
    p.control = true;
    p.citation = "negative control: one entry of mu perturbed";
    add(p);
  }
  return out;
}

PolyMatrix matrix_over(const RingPtr& R, const Rows& rows) { return PolyMatrix::parse(R, rows); }

Poly parse_equation(const std::string& eq, const RingPtr& R) {
  auto pos = eq.find('=');
  if (pos == std::string::npos) return parse_poly(eq, R);
  return parse_poly(eq.substr(0, pos), R) - parse_poly(eq.substr(pos + 1), R);
}

// Pulls an equation on X(phi) back to the chart ring.
Poly onto_chart(Poly e, const Chart& C) {
  Substitution one;
  one.assign(C.chart_var, Poly::constant(e.ring(), 1));
  e = substitute(e, one);
  RingPtr ring = ring_without(e.ring(), {C.chart_var});
  e = e.embed(ring);
  for (const auto& s : C.solved) {
    Substitution sub;
    sub.assign(s.var, s.image.embed(ring));
    e = substitute(e, sub);
    ring = ring_without(ring, {s.var});
    e = e.embed(ring);
  }
  return e;
}

// e == c * g for a nonzero constant c.
bool proportional(const Poly& e, const Poly& g) {
  if (e.is_zero() || g.is_zero() || e.size() != g.size()) return false;
  const auto& [m, c] = *g.terms().begin();
  Rational ratio = e.coefficient(m) / c;
  return ratio != 0 && e == g * ratio;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
  return s;
}

struct BuiltStep {
  MatrixFamily family;
  EquivalenceWitness witness;
};

void check(InstanceResult& r, std::string name, bool ok, std::string detail = "") {
  if (!ok) r.diffs.push_back(name + (detail.empty() ? "" : ": " + detail));
  r.checks.push_back({std::move(name), ok, std::move(detail)});
}

std::string kind_detail(CertKind want, CertKind got) {
  return want == got ? kind_name(got) : "expected " + kind_name(want) + ", got " + kind_name(got);
}

void check_charts(InstanceResult& r, const PaperInstance& inst, const PolyMatrix& last, const Certificate& cover) {
  IncidenceScheme X = incidence_scheme(last);
  std::vector<Chart> cs = charts(X);
  for (const auto& exp : inst.charts) {
    auto it = std::find_if(cs.begin(), cs.end(), [&](const Chart& c) { return c.chart_var == exp.chart_var; });
    std::string name = "chart " + exp.chart_var;
    if (it == cs.end()) {
      check(r, name, false, "no such chart");
      continue;
    }
    const Chart& C = *it;
    std::vector<std::string> got = C.equation_strings();
    if (!exp.equation.empty()) {
      Poly e = onto_chart(parse_equation(exp.equation, X.ring), C);
      const auto& gens = C.ideal.generators();
      bool ok = (e.is_zero() && gens.empty()) || (gens.size() == 1 && proportional(e, gens.front().embed(e.ring())));
      check(r, name + " equation", ok,
            ok ? join(got) : "expected " + e.str() + " (from " + exp.equation + "), got [" + join(got) + "]");
    }
    const Certificate& leaf = cover.children.at(C.index);
    check(r, name + " certificate", leaf.kind == exp.kind,
          kind_detail(exp.kind, leaf.kind));
  }
}

BuiltStep build_step(const DegenerationStep& s, const PolyMatrix& source, InstanceResult& r) {
  const RingPtr& base = source.ring();
  RingPtr L = ring_with_laurent(base, "t");
  if (s.kind == DegenerationStep::Kind::Scaling) {
    std::vector<Poly> rows, cols;
    for (int k : s.row_powers) rows.push_back(t_monomial(base, k));
    for (int k : s.col_powers) cols.push_back(t_monomial(base, k));
    MatrixFamily F = build_family(source, s.weights, rows, cols);
    if (s.quoted_family) {
      PolyMatrix quoted = matrix_over(L, *s.quoted_family);
      check(r, "family " + s.label, quoted == F.phi_t, "computed " + F.phi_t.str() + ", quoted " + quoted.str());
    }
    return {F, EquivalenceWitness{s.weights, rows, cols, std::nullopt, std::nullopt, std::nullopt}};
  }
  Substitution change;
  for (const auto& [v, img] : s.linear_change) change.assign(v, parse_poly(img, base));
  PolyMatrix target = matrix_over(base, s.target);
  PolyMatrix changed = source.map([&](const Poly& p) { return substitute(p, change); });
  auto pq = find_constant_equivalence(changed, target);
  if (!pq) throw PreconditionFailed("no constant equivalence from " + changed.str() + " to " + target.str());
  std::vector<Poly> rows(source.rows(), t_monomial(base, 0)), cols(source.cols(), t_monomial(base, 0));
  MatrixFamily F{target.embed(L), source};
  return {F, EquivalenceWitness{{}, rows, cols, pq->first, pq->second, change}};
}

}  // namespace

PolyMatrix PaperInstance::parsed() const { return PolyMatrix::parse(make_ring(vars), matrix); }

std::vector<std::string> instance_ids(bool include_controls) {
  std::vector<std::string> ids;
  for (int d = 1; d <= 6; ++d) ids.push_back("g2.typeA.d" + std::to_string(d));
  for (const auto& p : genus3_catalog(1)) {
    if (!p.control || include_controls) ids.push_back(p.id);
  }
  return ids;
}

PaperInstance instance(const std::string& id, std::uint64_t seed) {
  const std::string g2 = "g2.typeA.d";
  if (id.rfind(g2, 0) == 0) {
    std::string rest = id.substr(g2.size());
    if (!rest.empty() && rest.size() < 4 && std::all_of(rest.begin(), rest.end(), ::isdigit)) {
      int d = std::stoi(rest);
      if (d >= 1) return genus2(d);
    }
  }
  for (auto& p : genus3_catalog(seed)) {
    if (p.id == id) return p;
  }
  throw UnknownInstance("unknown instance '" + id + "'");
}

std::optional<TwoThreeSplit> two_three_split(const PolyMatrix& phi) {
  const RingPtr& R = phi.ring();
  if (R->has_laurent() || R->nvars() != 3 || phi.rows() != 2) return std::nullopt;
  Poly x = Poly::variable(R, R->var(0)), y = Poly::variable(R, R->var(1)), z = Poly::variable(R, R->var(2));
  if (phi.at(0, 1) != y || !phi.at(0, 2).is_zero() || phi.at(1, 1) != z || phi.at(1, 2) != x) return std::nullopt;
  Poly h = phi.at(0, 0) - x, f = phi.at(1, 0);
  auto in_m2 = [](const Poly& p) { return std::all_of(p.terms().begin(), p.terms().end(), [&](const auto& t) {
                                     return t.first.degree(p.ring()->nvars()) >= 2;
                                   }); };
  if (h.involves(0) || h.involves(1) || f.involves(0) || !in_m2(h) || !in_m2(f)) return std::nullopt;
  TwoThreeSplit out{TwoThreeBranch::Neither, h, f, ""};
  Monomial z2(R->width());
  z2[2] = 2;
  Rational c = h.coefficient(z2);
  bool f_quadratic = std::any_of(f.terms().begin(), f.terms().end(),
                                 [&](const auto& t) { return t.first.degree(R->nvars()) == 2; });
  if (c != 0) {
    out.branch = TwoThreeBranch::Case2;
    out.detail = "h = " + (c == 1 ? std::string() : to_string(c) + "*") + "z^2 + ...";
  } else if (f_quadratic) {
    out.branch = TwoThreeBranch::Case1;
    out.detail = "h in m^3, quadratic part of f is " + truncate(f, 2).str();
  } else {
    out.detail = "neither branch applies: h has no z^2 term and f has no quadratic part";
  }
  return out;
}

InstanceResult run_instance(const PaperInstance& inst, const SuiteOptions& opts) {
  InstanceResult r;
  r.id = inst.id;
  PolyMatrix current = inst.parsed();
  r.matrices.push_back(current.str());

  if (!inst.fitting.empty()) {
    Ideal expected(current.ring(), [&] {
      std::vector<Poly> g;
      for (const auto& s : inst.fitting) g.push_back(parse_poly(s, current.ring()));
      return g;
    }());
    Ideal got = fitting_ideal(current);
    check(r, "degeneracy ideal", ideal_equal(got, expected),
          "got (" + join(got.generator_strings()) + "), expected (" + join(inst.fitting) + ")");
  }

  auto blowup = [&](const PolyMatrix& M) {
    BlowupReport b = blowup_criterion(M);
    std::string detail;
    for (const auto& s : b.strata) {
      detail += (detail.empty() ? "" : ", ") + std::string("codim S_") + std::to_string(s.p) + " = " +
                std::to_string(s.codim);
    }
    check(r, "blow-up criterion " + M.str(), b.ok, detail);
    r.blowups.push_back(std::move(b));
  };
  blowup(current);
  if (auto split = two_three_split(current)) {
    check(r, "case split", split->branch != TwoThreeBranch::Neither, split->detail);
  }

  std::vector<BuiltStep> steps;
  bool chain_ok = true;
  if (!inst.note.empty() && inst.chain.empty() && inst.charts.empty()) {
    check(r, "reduction", false, inst.note);
    chain_ok = false;
  }
  for (const auto& s : inst.chain) {
    try {
      BuiltStep b = build_step(s, current, r);
      current = fiber0(b.family);
      r.matrices.push_back(current.str());
      steps.push_back(std::move(b));
      blowup(current);
    } catch (const Error& e) {
      check(r, "degeneration " + s.label, false, e.what());
      chain_ok = false;
      break;
    }
  }

  if (chain_ok) {
    Certificate cert = certify_matrix(current, opts.certify);
    check_charts(r, inst, current, cert);
    try {
      for (std::size_t k = steps.size(); k-- > 0;) {
        FlatnessReport fl = verify_flat_degeneration(steps[k].family);
        check(r, "flatness " + inst.chain[k].label, fl.ok,
              "fiber dim " + std::to_string(fl.fiber0_dim) + ", total dim " + std::to_string(fl.total_dim));
        cert = elkik_node(steps[k].family, steps[k].witness, fl, cert);
      }
    } catch (const PreconditionFailed& e) {
      check(r, "degeneration certificate", false, e.what());
    }
    check(r, "certificate complete", cert.complete());
    ValidationReport v = validate(cert);
    check(r, "certificate re-validates", v.valid, join(v.failures));
    r.certificate = std::move(cert);
  }

  bool all_ok = std::all_of(r.checks.begin(), r.checks.end(), [](const Check& c) { return c.ok; });
  r.pass = all_ok && r.certificate.has_value();
  return r;
}

namespace {

PipelineReport run_all(std::string name, const std::vector<PaperInstance>& insts, const SuiteOptions& opts) {
  PipelineReport rep;
  rep.name = std::move(name);
  rep.instances.resize(insts.size());
  unsigned threads = std::max(1u, opts.threads);
  if (threads == 1 || insts.size() < 2) {
    for (std::size_t i = 0; i < insts.size(); ++i) rep.instances[i] = run_instance(insts[i], opts);
  } else {
    std::vector<std::future<void>> pending;
    std::atomic<std::size_t> next{0};
    for (unsigned w = 0; w < std::min<std::size_t>(threads, insts.size()); ++w) {
      pending.push_back(std::async(std::launch::async, [&] {
        for (std::size_t i; (i = next++) < insts.size();) rep.instances[i] = run_instance(insts[i], opts);
      }));
    }
    for (auto& f : pending) f.get();
  }
  auto& s = rep.summary;
  for (const auto& r : rep.instances) {
    ++s.total;
    r.pass ? ++s.passed : ++s.failed;
    if (r.certificate) {
      if (r.certificate->complete()) ++s.complete_certificates;
      s.elkik_nodes += r.certificate->count(CertKind::Elkik);
      s.max_toric_degree = std::max(s.max_toric_degree, r.certificate->max_toric_degree());
    }
  }
  return rep;
}

}  // namespace

PipelineReport verify_genus2(int d_max, const SuiteOptions& opts) {
  std::vector<PaperInstance> insts;
  for (int d = 1; d <= d_max; ++d) insts.push_back(genus2(d));
  PipelineReport rep = run_all("genus2", insts, opts);
  rep.summary.notes.push_back("the theta-function matrix enters only through its local model (x^d, y)");
  return rep;
}

PipelineReport verify_genus3(const std::optional<std::string>& only, const SuiteOptions& opts) {
  std::vector<PaperInstance> insts;
  if (only) {
    insts.push_back(instance(*only, opts.seed));
  } else {
    for (auto& p : genus3_catalog(opts.seed)) {
      if (!p.control) insts.push_back(std::move(p));
    }
  }
  PipelineReport rep = run_all("genus3", insts, opts);
  rep.summary.notes.push_back("hyperelliptic genus 3 is not covered: no local model is available for it");
  return rep;
}

}  // namespace degloci
