#include "degloci/singularity.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <thread>

#include "degloci/errors.hpp"

namespace degloci {

namespace {

std::vector<Poly> nonzero_generators(const Ideal& I) {
  std::vector<Poly> out;
  for (const auto& g : I.generators()) {
    if (!g.is_zero()) out.push_back(g);
  }
  return out;
}

std::vector<std::vector<std::size_t>> column_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

bool is_single_term_free_of(const Poly& p, std::size_t a, std::size_t b) {
  return p.size() == 1 && !p.involves(a) && !p.involves(b);
}

}  // namespace

Ideal jacobian_ideal(const Ideal& I) {
  const RingPtr& ring = I.ring();
  std::vector<Poly> gens = nonzero_generators(I);
  if (gens.empty()) return Ideal(ring, {Poly::constant(ring, 1)}, I.order());
  if (is_unit_ideal(I)) return I;
  std::size_t n = ring->nvars();
  std::size_t c = gens.size();
  if (dimension(I) != static_cast<int>(n) - static_cast<int>(c)) {
    throw UnsupportedShape("not a complete intersection: " + std::to_string(c) + " generators, dimension " +
                           std::to_string(dimension(I)) + " in " + std::to_string(n) + " variables");
  }
  std::vector<std::vector<Poly>> jac;
  for (const auto& g : gens) {
    std::vector<Poly> row;
    for (std::size_t i = 0; i < n; ++i) row.push_back(g.derivative(i));
    jac.push_back(std::move(row));
  }
  std::vector<Poly> out = gens;
  for (const auto& cols : column_subsets(n, c)) {
    std::vector<std::vector<Poly>> sq;
    for (const auto& row : jac) {
      std::vector<Poly> r;
      for (auto j : cols) r.push_back(row[j]);
      sq.push_back(std::move(r));
    }
    Poly d = determinant(sq, ring);
    if (!d.is_zero()) out.push_back(std::move(d));
  }
  return Ideal(ring, std::move(out), I.order());
}

bool is_smooth(const Ideal& I) { return is_unit_ideal(jacobian_ideal(I)); }

std::optional<BinomialMatch> match_binomial_form(const Poly& f) {
  if (f.size() != 2) return std::nullopt;
  const RingPtr& ring = f.ring();
  std::size_t n = ring->nvars();
  std::vector<std::pair<Monomial, Rational>> terms(f.terms().begin(), f.terms().end());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      Monomial uv(ring->width());
      uv[a] = 1;
      uv[b] = 1;
      for (int k = 0; k < 2; ++k) {
        if (terms[k].first != uv) continue;
        Poly other = Poly::term(ring, terms[1 - k].first, terms[1 - k].second);
        if (!is_single_term_free_of(other, a, b)) continue;
        Rational unit = terms[k].second;
        return BinomialMatch{ring->var(a), ring->var(b), other * Rational(-1 / unit), unit};
      }
    }
  }
  return std::nullopt;
}

std::optional<FormMatch> match_lemma_form(const Poly& f) {
  if (f.size() != 3) return std::nullopt;
  const RingPtr& ring = f.ring();
  std::size_t n = ring->nvars();
  std::vector<std::pair<Monomial, Rational>> terms(f.terms().begin(), f.terms().end());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      Monomial uv(ring->width());
      uv[a] = 1;
      uv[b] = 1;
      for (std::size_t k = 0; k < 3; ++k) {
        if (terms[k].first != uv) continue;
        Rational unit = terms[k].second;
        std::size_t r1 = (k + 1) % 3, r2 = (k + 2) % 3;
        for (int swap = 0; swap < 2; ++swap) {
          const auto& tu = terms[swap ? r2 : r1];
          const auto& tv = terms[swap ? r1 : r2];
          // tu = u * m1, tv = v^d * m2 with m1, m2 free of u and v.
          if (tu.first[a] != 1 || tu.first[b] != 0) continue;
          if (tv.first[a] != 0) continue;
          Monomial m1 = tu.first;
          m1[a] = 0;
          Monomial m2 = tv.first;
          int d = m2[b];
          m2[b] = 0;
          Poly M1 = Poly::term(ring, m1, -tu.second / unit);
          Poly M2 = Poly::term(ring, m2, -tv.second / unit);
          return FormMatch{ring->var(a), ring->var(b), d, M1, M2, unit};
        }
      }
    }
  }
  return std::nullopt;
}

bool toric_normal(const Poly& f) {
  if (!match_binomial_form(f)) throw FormError("toric_normal: '" + f.str() + "' is not of the form c*(uv - M)");
  Ideal J = jacobian_ideal(Ideal(f.ring(), {f}));
  if (is_unit_ideal(J)) return true;
  int n = static_cast<int>(f.ring()->nvars());
  return (n - 1) - dimension(J) >= 2;
}

namespace {

const char* kSmoothCite = "Jacobian criterion: the Jacobian ideal of the complete intersection is the unit ideal";
const char* kToricCite =
    "normal toric hypersurface uv = M (Serre R1 via the Jacobian ideal, S2 for hypersurfaces); "
    "normal toric singularities are rational (Kempf-Knudsen-Mumford-Saint-Donat)";
const char* kFormCite =
    "hypersurface x1x2 = x1M1 + x2^dM2: the shift x2 -> x2 + M1 gives x1x2 = (x2 + M1)^dM2";
const char* kElkikHyperCite =
    "isotrivial family x1x2 = (t x2 + M1)^dM2 with normal toric limit; rational singularities are "
    "preserved under flat deformation (Elkik, Thm. IV)";

std::string fresh_parameter(const Ring& ring) {
  std::string name = "t";
  while (ring.index_of(name)) name += "_";
  return name;
}

Certificate certify_at_depth(const Ideal& I, const CertifyOptions& opts, int depth) {
  try {
    I.basis(opts.groebner);
    std::vector<Poly> gens = nonzero_generators(I);
    Ideal J = jacobian_ideal(I);
    J.basis(opts.groebner);
    if (is_unit_ideal(J)) {
      return Certificate{CertKind::Smooth, I, kSmoothCite, SmoothWitness{static_cast<int>(gens.size())}, {}};
    }
    if (gens.size() != 1) return unknown_leaf(I, "singular and not a hypersurface");
    const Poly& f = gens.front();
    if (auto bm = match_binomial_form(f)) {
      if (toric_normal(f)) {
        Ideal Jf = jacobian_ideal(Ideal(f.ring(), {f}));
        int codim = is_unit_ideal(Jf) ? static_cast<int>(f.ring()->nvars())
                                      : static_cast<int>(f.ring()->nvars()) - 1 - dimension(Jf);
        return Certificate{CertKind::NormalToric, I, kToricCite, ToricWitness{*bm, codim}, {}};
      }
    }
    if (auto fm = match_lemma_form(f)) {
      if (depth >= opts.max_depth) return unknown_leaf(I, "recursion depth exhausted");
      const RingPtr& ring = f.ring();
      Substitution shift;
      shift.assign(fm->v, Poly::variable(ring, fm->v) + fm->M1);
      Poly shifted = substitute(f * Rational(1 / fm->unit), shift);
      std::map<std::string, int> weights;
      for (const auto& v : ring->vars()) weights[v] = 0;
      weights[fm->u] = -1;
      weights[fm->v] = 1;
      Poly family = weighted_scale(shifted, weights, 0, fresh_parameter(*ring));
      Poly limit = set_t(family, 0);
      Ideal shifted_ideal(ring, {shifted});
      Certificate limit_cert = certify_at_depth(Ideal(ring, {limit}), opts, depth + 1);
      Certificate elkik{CertKind::Elkik, shifted_ideal, kElkikHyperCite,
                        ElkikWitness{HypersurfaceFamily{weights, family, limit}}, {std::move(limit_cert)}};
      return Certificate{CertKind::FormMatch, I, kFormCite, FormMatchWitness{*fm, shift, shifted},
                         {std::move(elkik)}};
    }
    return unknown_leaf(I, "no catalog form applies");
  } catch (const BudgetExceeded&) {
    return unknown_leaf(I, "budget");
  } catch (const UnsupportedShape& e) {
    return unknown_leaf(I, e.what());
  }
}

}  // namespace

Certificate certify_ideal(const Ideal& I, const CertifyOptions& opts) { return certify_at_depth(I, opts, 0); }

Certificate certify_rational(const Chart& C, const CertifyOptions& opts) { return certify_ideal(C.ideal, opts); }

Ideal incidence_ideal(const PolyMatrix& phi) {
  IncidenceScheme X = incidence_scheme(phi);
  return Ideal(X.ring, X.equations);
}

Certificate certify_matrix(const PolyMatrix& phi, const CertifyOptions& opts) {
  IncidenceScheme X = incidence_scheme(phi);
  BlowupReport blowup = blowup_criterion(phi);
  std::vector<Chart> cs = charts(X);

  std::vector<Certificate> children;
  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  if (threads <= 1 || cs.size() <= 1) {
    for (const auto& c : cs) children.push_back(certify_rational(c, opts));
  } else {
    std::vector<std::future<Certificate>> pending;
    for (const auto& c : cs) {
      pending.push_back(std::async(std::launch::async, [&c, &opts] { return certify_rational(c, opts); }));
    }
    for (auto& p : pending) children.push_back(p.get());
  }

  ChartCoverWitness w{phi, X.proj_vars, {}, blowup};
  for (const auto& c : cs) w.solved.push_back(c.solved);
  std::string cite = "standard affine charts u_j = 1 cover the projective fibers";
  if (blowup.ok) cite += "; codimension criterion identifies X(phi) with the blow-up of Z(phi)";
  return Certificate{CertKind::ChartCover, Ideal(X.ring, X.equations), cite, std::move(w), std::move(children)};
}

}  // namespace degloci
