#include "degloci/validate.hpp"

#include "degloci/degeneration.hpp"
#include "degloci/errors.hpp"
#include "degloci/singularity.hpp"

namespace degloci {

namespace {

class Checker {
 public:
  ValidationReport report;

  void visit(const Certificate& c, const std::string& path) {
    try {
      check(c, path);
    } catch (const std::exception& e) {
      fail(path, std::string("exception: ") + e.what());
    }
    for (std::size_t i = 0; i < c.children.size(); ++i) visit(c.children[i], path + "/" + std::to_string(i));
  }

 private:
  void fail(const std::string& path, const std::string& what) {
    report.valid = false;
    report.failures.push_back(path + ": " + what);
  }

  static std::vector<Poly> gens(const Ideal& I) {
    std::vector<Poly> out;
    for (const auto& g : I.generators()) {
      if (!g.is_zero()) out.push_back(g);
    }
    return out;
  }

  // The single generator of a hypersurface subject, or nullopt.
  std::optional<Poly> single(const Certificate& c, const std::string& path) {
    auto g = gens(c.subject);
    if (g.size() != 1) {
      fail(path, "expected a hypersurface subject");
      return std::nullopt;
    }
    return g.front();
  }

  static bool equal_up_to_sign(const Poly& a, const Poly& b) { return a == b || a == -b; }

  void check(const Certificate& c, const std::string& path) {
    switch (c.kind) {
      case CertKind::Unknown:
        report.complete = false;
        if (!c.children.empty()) fail(path, "unknown leaf with children");
        return;
      case CertKind::Smooth:
        if (!is_smooth(c.subject)) fail(path, "Jacobian ideal is not the unit ideal");
        return;
      case CertKind::NormalToric:
        return check_toric(c, path);
      case CertKind::FormMatch:
        return check_form(c, path);
      case CertKind::Elkik:
        return check_elkik(c, path);
      case CertKind::ChartCover:
        return check_cover(c, path);
    }
  }

  void check_toric(const Certificate& c, const std::string& path) {
    const auto* w = std::get_if<ToricWitness>(&c.witness);
    auto f = single(c, path);
    if (!w || !f) return fail(path, "malformed toric witness");
    const RingPtr& ring = f->ring();
    const auto& m = w->match;
    auto u = ring->index_of(m.u), v = ring->index_of(m.v);
    if (!u || !v || *u == *v) return fail(path, "toric witness names unknown variables");
    Poly M = m.M.embed(ring);
    if (M.size() != 1 || M.involves(*u) || M.involves(*v)) return fail(path, "M is not a term free of u and v");
    Poly expected = (Poly::variable(ring, m.u) * Poly::variable(ring, m.v) - M) * m.unit;
    if (expected != *f) fail(path, "subject is not unit*(uv - M)");
    if (!toric_normal(*f)) fail(path, "singular locus has codimension < 2");
  }

  void check_form(const Certificate& c, const std::string& path) {
    const auto* w = std::get_if<FormMatchWitness>(&c.witness);
    auto f = single(c, path);
    if (!w || !f) return fail(path, "malformed form witness");
    const RingPtr& ring = f->ring();
    const auto& m = w->match;
    auto u = ring->index_of(m.u), v = ring->index_of(m.v);
    if (!u || !v || *u == *v || m.d < 0) return fail(path, "form witness names unknown variables");
    Poly M1 = m.M1.embed(ring), M2 = m.M2.embed(ring);
    for (const Poly* p : {&M1, &M2}) {
      if (p->size() != 1 || p->involves(*u) || p->involves(*v)) return fail(path, "M1/M2 not terms free of u, v");
    }
    Poly U = Poly::variable(ring, m.u), V = Poly::variable(ring, m.v);
    Poly expected = (U * V - U * M1 - V.pow(static_cast<unsigned>(m.d)) * M2) * m.unit;
    if (expected != *f) fail(path, "subject is not unit*(uv - u*M1 - v^d*M2)");
    Substitution shift;
    shift.assign(m.v, V + M1);
    Poly shifted = substitute(*f * Rational(1 / m.unit), shift);
    if (shifted != w->shifted.embed(ring)) fail(path, "recorded shifted equation does not match");
    if (c.children.size() != 1 || c.children.front().kind != CertKind::Elkik) {
      return fail(path, "form node must have one Elkik child");
    }
    auto g = gens(c.children.front().subject);
    if (g.size() != 1 || !equal_up_to_sign(g.front(), shifted)) fail(path, "child subject is not the shifted equation");
  }

  void check_elkik(const Certificate& c, const std::string& path) {
    const auto* w = std::get_if<ElkikWitness>(&c.witness);
    if (!w || c.children.size() != 1) return fail(path, "malformed Elkik node");
    const Certificate& child = c.children.front();
    if (const auto* h = std::get_if<HypersurfaceFamily>(&w->data)) {
      auto g = single(c, path);
      if (!g) return;
      const RingPtr& ring = g->ring();
      std::string param = h->family.ring()->has_laurent() ? h->family.ring()->laurent_name() : "t";
      Poly family = weighted_scale(*g, h->weights, 0, param);
      if (family != h->family) return fail(path, "family is not the weighted scaling of the subject");
      laurent_as_polynomial(family);  // throws on a pole
      if (set_t(family, 1) != *g) fail(path, "fiber at t = 1 differs from the subject");
      Poly limit = set_t(family, 0);
      if (limit != h->limit.embed(ring)) fail(path, "recorded limit differs from the t = 0 fiber");
      if (limit.is_zero()) fail(path, "t divides the family (not flat)");
      auto cg = gens(child.subject);
      if (cg.size() != 1 || !equal_up_to_sign(cg.front(), limit)) fail(path, "child subject is not the limit");
      return;
    }
    const auto& d = std::get<MatrixDegeneration>(w->data);
    std::string iso = isotriviality_failure(d.family, d.witness);
    if (!iso.empty()) fail(path, "isotriviality: " + iso);
    FlatnessReport again = verify_flat_degeneration(d.family);
    if (!again.ok || again.fiber0_dim != d.flatness.fiber0_dim || again.total_dim != d.flatness.total_dim) {
      fail(path, "flatness report does not re-check");
    }
    if (!ideal_equal(c.subject, incidence_ideal(d.family.origin))) fail(path, "subject is not X(origin)");
    if (!ideal_equal(child.subject, incidence_ideal(fiber0(d.family)))) fail(path, "child subject is not X(phi_0)");
  }

  static bool same_solutions(const std::vector<SolvedVariable>& a, const std::vector<SolvedVariable>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].var != b[i].var || a[i].image.str() != b[i].image.str()) return false;
    }
    return true;
  }

  void check_cover(const Certificate& c, const std::string& path) {
    const auto* w = std::get_if<ChartCoverWitness>(&c.witness);
    if (!w) return fail(path, "malformed chart cover");
    IncidenceScheme X = incidence_scheme(w->matrix);
    if (!ideal_equal(c.subject, Ideal(X.ring, X.equations))) fail(path, "subject is not X(phi)");
    if (X.proj_vars != w->proj_vars) fail(path, "projective coordinates differ");
    std::vector<Chart> cs = charts(X);
    if (cs.size() != c.children.size()) return fail(path, "one child per chart expected");
    for (std::size_t j = 0; j < cs.size(); ++j) {
      const Ideal& sub = c.children[j].subject;
      if (!same_ring(sub.ring(), cs[j].ring) || !ideal_equal(sub, cs[j].ideal)) {
        fail(path, "child " + std::to_string(j) + " subject is not chart " + cs[j].chart_var);
      }
      if (j >= w->solved.size() || !same_solutions(w->solved[j], cs[j].solved)) {
        fail(path, "recorded eliminations differ on chart " + cs[j].chart_var);
      }
    }
    BlowupReport b = blowup_criterion(w->matrix);
    if (b.ok != w->blowup.ok || b.strata.size() != w->blowup.strata.size()) fail(path, "blow-up report differs");
  }
};

}  // namespace

ValidationReport validate(const Certificate& cert) {
  Checker checker;
  checker.visit(cert, "");
  return checker.report;
}

}  // namespace degloci
