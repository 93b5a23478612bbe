#include "degloci/degeneration.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <tuple>

#include "degloci/errors.hpp"
#include "degloci/linalg.hpp"
#include "degloci/singularity.hpp"

namespace degloci {

Poly t_monomial(const RingPtr& base, int k, const Rational& c) {
  RingPtr L = base->has_laurent() ? base : ring_with_laurent(base, "t");
  Monomial m(L->width());
  m[L->laurent_slot()] = k;
  return Poly::term(L, m, c);
}

namespace {

// A nonzero constant times a power of t, nothing else.
bool is_t_unit(const Poly& p) {
  if (p.size() != 1) return false;
  const Monomial& m = p.terms().begin()->first;
  for (std::size_t i = 0; i < p.ring()->nvars(); ++i) {
    if (m[i] != 0) return false;
  }
  return true;
}

void scale(std::vector<std::vector<Poly>>& M, const std::vector<Poly>& rows, const std::vector<Poly>& cols) {
  for (std::size_t i = 0; i < M.size(); ++i) {
    for (std::size_t j = 0; j < M[i].size(); ++j) {
      if (M[i][j].is_zero()) continue;
      M[i][j] = rows[i] * M[i][j] * cols[j];
    }
  }
}

std::vector<Poly> embed_all(const std::vector<Poly>& ps, const RingPtr& L, const char* what) {
  std::vector<Poly> out;
  for (const auto& p : ps) {
    Poly q = p.embed(L);
    if (!is_t_unit(q)) throw PreconditionFailed(std::string(what) + " entry '" + p.str() + "' is not c*t^k");
    out.push_back(std::move(q));
  }
  return out;
}

std::vector<std::vector<Poly>> embed_square(const std::vector<std::vector<Poly>>& M, std::size_t n, const RingPtr& L,
                                            const char* what) {
  if (M.size() != n) throw PreconditionFailed(std::string(what) + " has the wrong size");
  std::vector<std::vector<Poly>> out;
  for (const auto& row : M) {
    if (row.size() != n) throw PreconditionFailed(std::string(what) + " has the wrong size");
    std::vector<Poly> r;
    for (const auto& e : row) r.push_back(e.embed(L));
    out.push_back(std::move(r));
  }
  if (!is_t_unit(determinant(out, L))) {
    throw PreconditionFailed(std::string(what) + " is not invertible over Q[t, 1/t]");
  }
  return out;
}

void check_linear_change(const Substitution& s, const RingPtr& base) {
  std::size_t n = base->nvars();
  QMatrix A(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) A[i][i] = 1;
  for (const auto& [var, image] : s.assignments()) {
    std::size_t row = base->require(var);
    Poly img = image.embed(base);
    A[row][row] = 0;
    for (const auto& [m, c] : img.terms()) {
      if (m.degree(n) != 1) throw PreconditionFailed("linear change image of '" + var + "' is not linear");
      for (std::size_t j = 0; j < n; ++j) {
        if (m[j] == 1) A[row][j] = c;
      }
    }
  }
  if (det(A) == 0) throw PreconditionFailed("linear change is not invertible");
}

}  // namespace

MatrixFamily build_family(const PolyMatrix& origin, const std::map<std::string, int>& weights,
                          const std::vector<Poly>& row_clearings, const std::vector<Poly>& col_clearings) {
  if (origin.ring()->has_laurent()) throw Error("build_family: origin must be t-independent");
  RingPtr L = ring_with_laurent(origin.ring(), "t");
  if (row_clearings.size() != origin.rows() || col_clearings.size() != origin.cols()) {
    throw PreconditionFailed("clearings do not match the matrix shape");
  }
  std::map<std::string, int> w = weights;
  for (const auto& v : origin.ring()->vars()) w.emplace(v, 0);
  std::vector<std::vector<Poly>> M;
  for (const auto& row : origin.entries()) {
    std::vector<Poly> r;
    for (const auto& e : row) r.push_back(weighted_scale(e, w, 0, "t").embed(L));
    M.push_back(std::move(r));
  }
  scale(M, embed_all(row_clearings, L, "row clearing"), embed_all(col_clearings, L, "column clearing"));
  for (std::size_t i = 0; i < M.size(); ++i) {
    for (std::size_t j = 0; j < M[i].size(); ++j) {
      if (!M[i][j].is_zero() && t_range(M[i][j]).first < 0) {
        throw PoleError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + M[i][j].str() +
                        " keeps a negative power of t");
      }
    }
  }
  return MatrixFamily{PolyMatrix(L, std::move(M)), origin};
}

PolyMatrix fiber0(const MatrixFamily& F) {
  return F.phi_t.map([](const Poly& p) { return set_t(p, 0); });
}

PolyMatrix apply_witness(const MatrixFamily& F, const EquivalenceWitness& W) {
  const RingPtr& L = F.phi_t.ring();
  if (!L->has_laurent()) throw PreconditionFailed("family matrix has no Laurent parameter");
  RingPtr base = F.origin.ring();
  if (!same_ring(ring_without_laurent(L), base)) {
    throw PreconditionFailed("family and origin live over different base rings");
  }
  std::size_t m = F.origin.rows();
  if (W.row_scales.size() != m || W.col_scales.size() != m + 1) {
    throw PreconditionFailed("witness scales do not match the matrix shape");
  }

  PolyMatrix M = F.origin;
  if (W.linear_change) {
    check_linear_change(*W.linear_change, base);
    Substitution s;
    for (const auto& [var, image] : W.linear_change->assignments()) s.assign(var, image.embed(base));
    M = M.map([&](const Poly& p) { return substitute(p, s); });
  }
  std::map<std::string, int> w = W.variable_weights;
  for (const auto& [var, k] : w) {
    (void)k;
    if (!base->index_of(var)) throw PreconditionFailed("weight given for unknown variable '" + var + "'");
  }
  for (const auto& v : base->vars()) w.emplace(v, 0);
  std::vector<std::vector<Poly>> E;
  for (const auto& row : M.entries()) {
    std::vector<Poly> r;
    for (const auto& e : row) r.push_back(weighted_scale(e, w, 0, L->laurent_name()).embed(L));
    E.push_back(std::move(r));
  }
  scale(E, embed_all(W.row_scales, L, "row scale"), embed_all(W.col_scales, L, "column scale"));
  if (W.row_ops) E = matmul(embed_square(*W.row_ops, m, L, "row operation matrix"), E);
  if (W.col_ops) E = matmul(E, embed_square(*W.col_ops, m + 1, L, "column operation matrix"));
  return PolyMatrix(L, std::move(E));
}

std::string isotriviality_failure(const MatrixFamily& F, const EquivalenceWitness& W) {
  try {
    PolyMatrix M = apply_witness(F, W);
    if (M == F.phi_t) return {};
    for (std::size_t i = 0; i < M.rows(); ++i) {
      for (std::size_t j = 0; j < M.cols(); ++j) {
        if (M.at(i, j) != F.phi_t.at(i, j)) {
          return "entry (" + std::to_string(i) + "," + std::to_string(j) + "): witness gives " + M.at(i, j).str() +
                 ", family has " + F.phi_t.at(i, j).str();
        }
      }
    }
    return "matrices differ";
  } catch (const Error& e) {
    return e.what();
  }
}

bool verify_isotriviality(const MatrixFamily& F, const EquivalenceWitness& W) {
  return isotriviality_failure(F, W).empty();
}

FlatnessReport verify_flat_degeneration(const MatrixFamily& F) {
  FlatnessReport r;
  r.n = static_cast<int>(F.origin.ring()->nvars());
  PolyMatrix P0 = fiber0(F);
  IncidenceScheme X0 = incidence_scheme(P0);
  r.fiber0_dim = -1;
  for (const auto& c : charts(X0)) {
    int d = dimension(c.ideal);
    r.fiber0_chart_dims.push_back(d);
    r.fiber0_dim = std::max(r.fiber0_dim, d);
  }
  PolyMatrix total = F.phi_t.map([](const Poly& p) { return laurent_as_polynomial(p); });
  IncidenceScheme Xt = incidence_scheme(total);
  r.total_dim = -1;
  for (const auto& c : charts(Xt)) r.total_dim = std::max(r.total_dim, dimension(c.ideal));
  r.ok = r.fiber0_dim == r.n && r.total_dim == r.n + 1;
  return r;
}

namespace {

bool same_report(const FlatnessReport& a, const FlatnessReport& b) {
  return a.n == b.n && a.fiber0_chart_dims == b.fiber0_chart_dims && a.fiber0_dim == b.fiber0_dim &&
         a.total_dim == b.total_dim && a.ok == b.ok;
}

}  // namespace

Certificate elkik_node(const MatrixFamily& F, const EquivalenceWitness& W,
                       const std::optional<FlatnessReport>& flatness, const Certificate& limit_cert) {
  std::string iso = isotriviality_failure(F, W);
  if (!iso.empty()) throw PreconditionFailed("isotriviality: " + iso);
  if (!flatness) throw PreconditionFailed("flatness: no report supplied");
  FlatnessReport again = verify_flat_degeneration(F);
  if (!same_report(again, *flatness)) throw PreconditionFailed("flatness: report does not match recomputation");
  if (!again.ok) {
    throw PreconditionFailed("flatness: fiber dimension " + std::to_string(again.fiber0_dim) + ", total dimension " +
                             std::to_string(again.total_dim) + " for n = " + std::to_string(again.n));
  }
  if (!limit_cert.complete()) throw PreconditionFailed("limit certificate: incomplete");
  Ideal limit_subject = incidence_ideal(fiber0(F));
  bool match = false;
  try {
    match = ideal_equal(limit_cert.subject, limit_subject);
  } catch (const RingMismatch&) {
    match = false;
  }
  if (!match) throw PreconditionFailed("limit certificate: subject is not the incidence scheme of the t = 0 fiber");
  return Certificate{CertKind::Elkik, incidence_ideal(F.origin),
                     "flat family with fibers equivalent to X(origin) for t != 0 and special fiber with rational "
                     "singularities; rational singularities are preserved under flat deformation (Elkik, Thm. IV)",
                     ElkikWitness{MatrixDegeneration{F, W, again}}, {limit_cert}};
}

std::optional<std::pair<std::vector<std::vector<Poly>>, std::vector<std::vector<Poly>>>> find_constant_equivalence(
    const PolyMatrix& source, const PolyMatrix& target) {
  if (!same_ring(source.ring(), target.ring()) || source.rows() != target.rows()) return std::nullopt;
  const RingPtr& ring = source.ring();
  std::size_t m = source.rows(), c = source.cols();
  // Unknowns: P' (m x m) then Q (c x c), solving source * Q - P' * target = 0.
  std::size_t np = m * m, nq = c * c, nu = np + nq;
  std::map<std::tuple<std::size_t, std::size_t, Monomial>, std::vector<Rational>> eqs;
  auto row_of = [&](std::size_t i, std::size_t j, const Monomial& mono) -> std::vector<Rational>& {
    auto [it, inserted] = eqs.try_emplace({i, j, mono}, std::vector<Rational>(nu, 0));
    return it->second;
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      for (std::size_t l = 0; l < c; ++l) {
        for (const auto& [mono, coef] : source.at(i, l).terms()) row_of(i, j, mono)[np + l * c + j] += coef;
      }
      for (std::size_t k = 0; k < m; ++k) {
        for (const auto& [mono, coef] : target.at(k, j).terms()) row_of(i, j, mono)[i * m + k] -= coef;
      }
    }
  }
  QMatrix A;
  for (auto& [key, row] : eqs) A.push_back(std::move(row));
  std::vector<std::vector<Rational>> null = nullspace(std::move(A), nu);
  if (null.empty()) return std::nullopt;

  // Deterministic search over small integer combinations of the nullspace.
  std::uint64_t state = 0x9e3779b97f4a7c15ULL;
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<Rational> v(nu, 0);
    for (std::size_t b = 0; b < null.size(); ++b) {
      long coef;
      if (attempt == 0) {
        coef = 1;
      } else if (attempt == 1) {
        coef = static_cast<long>(b) + 1;
      } else {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        coef = static_cast<long>((state >> 33) % 7) - 3;
      }
      for (std::size_t k = 0; k < nu; ++k) v[k] += coef * null[b][k];
    }
    QMatrix Pp(m, std::vector<Rational>(m)), Q(c, std::vector<Rational>(c));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < m; ++k) Pp[i][k] = v[i * m + k];
    for (std::size_t l = 0; l < c; ++l)
      for (std::size_t j = 0; j < c; ++j) Q[l][j] = v[np + l * c + j];
    if (det(Q) == 0) continue;
    auto P = inverse(Pp);
    if (!P) continue;
    auto lift = [&](const QMatrix& q) {
      std::vector<std::vector<Poly>> out;
      for (const auto& row : q) {
        std::vector<Poly> r;
        for (const auto& x : row) r.push_back(Poly::constant(ring, x));
        out.push_back(std::move(r));
      }
      return out;
    };
    return std::make_pair(lift(*P), lift(Q));
  }
  return std::nullopt;
}

}  // namespace degloci
