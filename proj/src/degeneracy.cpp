#include "degloci/degeneracy.hpp"

#include <algorithm>

#include "degloci/errors.hpp"
#include "degloci/parse.hpp"

namespace degloci {

PolyMatrix::PolyMatrix(RingPtr ring, std::vector<std::vector<Poly>> entries)
    : ring_(std::move(ring)), entries_(std::move(entries)) {
  if (entries_.empty()) throw UnsupportedShape("matrix needs at least one row");
  std::size_t m = entries_.size();
  for (auto& row : entries_) {
    if (row.size() != m + 1) {
      throw UnsupportedShape("matrix must be m x (m+1); got a row of length " + std::to_string(row.size()) +
                             " with " + std::to_string(m) + " rows");
    }
    for (auto& e : row) {
      if (!same_ring(e.ring(), ring_)) e = e.embed(ring_);
    }
  }
}

PolyMatrix PolyMatrix::parse(const RingPtr& ring, const std::vector<std::vector<std::string>>& entries) {
  std::vector<std::vector<Poly>> rows;
  for (const auto& r : entries) {
    std::vector<Poly> row;
    for (const auto& s : r) row.push_back(parse_poly(s, ring));
    rows.push_back(std::move(row));
  }
  return PolyMatrix(ring, std::move(rows));
}

PolyMatrix PolyMatrix::map(const std::function<Poly(const Poly&)>& fn) const {
  std::vector<std::vector<Poly>> out;
  RingPtr target;
  for (const auto& r : entries_) {
    std::vector<Poly> row;
    for (const auto& e : r) {
      row.push_back(fn(e));
      if (!target) target = row.back().ring();
    }
    out.push_back(std::move(row));
  }
  return PolyMatrix(target, std::move(out));
}

PolyMatrix PolyMatrix::embed(const RingPtr& target) const {
  return map([&](const Poly& p) { return p.embed(target); });
}

std::vector<std::vector<std::string>> PolyMatrix::strings() const {
  std::vector<std::vector<std::string>> out;
  for (const auto& r : entries_) {
    std::vector<std::string> row;
    for (const auto& e : r) row.push_back(e.str());
    out.push_back(std::move(row));
  }
  return out;
}

std::string PolyMatrix::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < cols(); ++j) s += (j ? ", " : "") + entries_[i][j].str();
    s += "]";
  }
  return s + "]";
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return same_ring(a.ring_, b.ring_) && a.entries_ == b.entries_;
}

Poly determinant(const std::vector<std::vector<Poly>>& square, const RingPtr& ring) {
  std::size_t k = square.size();
  if (k == 0) return Poly::constant(ring, 1);
  if (k == 1) return square[0][0];
  if (k == 2) return square[0][0] * square[1][1] - square[0][1] * square[1][0];
  Poly det(ring);
  for (std::size_t j = 0; j < k; ++j) {
    if (square[0][j].is_zero()) continue;
    std::vector<std::vector<Poly>> sub;
    for (std::size_t i = 1; i < k; ++i) {
      std::vector<Poly> row;
      for (std::size_t c = 0; c < k; ++c) {
        if (c != j) row.push_back(square[i][c]);
      }
      sub.push_back(std::move(row));
    }
    Poly term = square[0][j] * determinant(sub, ring);
    if (j % 2) det -= term;
    else det += term;
  }
  return det;
}

std::vector<std::vector<Poly>> matmul(const std::vector<std::vector<Poly>>& a,
                                      const std::vector<std::vector<Poly>>& b) {
  if (a.empty() || b.empty() || a.front().size() != b.size()) throw UnsupportedShape("matmul: shape mismatch");
  const RingPtr& ring = a.front().front().ring();
  std::vector<std::vector<Poly>> out(a.size(), std::vector<Poly>(b.front().size(), Poly(ring)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.front().size(); ++j) {
      for (std::size_t k = 0; k < b.size(); ++k) {
        if (a[i][k].is_zero() || b[k][j].is_zero()) continue;
        out[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return out;
}

namespace {

std::vector<std::vector<Poly>> submatrix(const PolyMatrix& phi, const std::vector<std::size_t>& rows,
                                         const std::vector<std::size_t>& cols) {
  std::vector<std::vector<Poly>> out;
  for (auto r : rows) {
    std::vector<Poly> row;
    for (auto c : cols) row.push_back(phi.at(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
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

void require_polynomial(const PolyMatrix& phi, const char* what) {
  if (phi.ring()->has_laurent()) {
    throw Error(std::string(what) + ": matrix has a Laurent parameter; specialize it first");
  }
}

}  // namespace

std::vector<Poly> signed_maximal_minors(const PolyMatrix& phi) {
  std::vector<std::size_t> all_rows(phi.rows());
  for (std::size_t i = 0; i < all_rows.size(); ++i) all_rows[i] = i;
  std::vector<Poly> out;
  for (std::size_t j = 0; j < phi.cols(); ++j) {
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < phi.cols(); ++c) {
      if (c != j) cols.push_back(c);
    }
    Poly minor = determinant(submatrix(phi, all_rows, cols), phi.ring());
    out.push_back(j % 2 ? -minor : minor);
  }
  return out;
}

Ideal fitting_ideal(const PolyMatrix& phi) {
  require_polynomial(phi, "fitting_ideal");
  std::vector<Poly> minors = signed_maximal_minors(phi);
  if (std::all_of(minors.begin(), minors.end(), [](const Poly& p) { return p.is_zero(); })) {
    throw DegenerateMatrix("every maximal minor of " + phi.str() + " vanishes");
  }
  return Ideal(phi.ring(), std::move(minors));
}

std::vector<std::string> projective_names(std::size_t m, const Ring& base) {
  std::vector<std::string> names;
  if (m == 1) names = {"alpha", "beta"};
  else if (m == 2) names = {"alpha", "beta", "gamma"};
  bool clash = std::any_of(names.begin(), names.end(), [&](const std::string& n) { return base.index_of(n).has_value(); });
  if (names.empty() || clash) {
    names.clear();
    for (std::size_t j = 0; j <= m; ++j) names.push_back("u" + std::to_string(j));
  }
  for (const auto& n : names) {
    if (base.index_of(n)) throw ConfigError("projective coordinate name '" + n + "' clashes with a base variable");
  }
  return names;
}

IncidenceScheme incidence_scheme(const PolyMatrix& phi) {
  require_polynomial(phi, "incidence_scheme");
  IncidenceScheme X;
  X.base = phi.ring();
  X.proj_vars = projective_names(phi.rows(), *phi.ring());
  X.ring = ring_with(phi.ring(), X.proj_vars);
  for (std::size_t i = 0; i < phi.rows(); ++i) {
    Poly eq(X.ring);
    for (std::size_t j = 0; j < phi.cols(); ++j) {
      if (phi.at(i, j).is_zero()) continue;
      eq += phi.at(i, j).embed(X.ring) * Poly::variable(X.ring, X.proj_vars[j]);
    }
    X.equations.push_back(std::move(eq));
  }
  return X;
}

namespace {

// First (generator, variable) pair in which the variable occurs linearly with
// a nonzero constant coefficient.
bool find_linear(const std::vector<Poly>& gens, const Ring& ring, std::size_t& gi, std::size_t& slot) {
  for (gi = 0; gi < gens.size(); ++gi) {
    for (slot = 0; slot < ring.nvars(); ++slot) {
      if (gens[gi].degree_in(slot) != 1) continue;
      Poly c = gens[gi].coefficient_in(slot, 1);
      if (c.is_constant() && !c.is_zero()) return true;
    }
  }
  return false;
}

}  // namespace

Chart chart(const IncidenceScheme& X, std::size_t j) {
  if (j >= X.proj_vars.size()) throw Error("chart index out of range");
  const std::string& uj = X.proj_vars[j];
  RingPtr ring = ring_without(X.ring, {uj});
  std::vector<Poly> gens;
  Substitution set_one;
  set_one.assign(uj, Poly::constant(X.ring, 1));
  for (const auto& e : X.equations) {
    Poly g = substitute(e, set_one).embed(ring);
    if (!g.is_zero()) gens.push_back(std::move(g));
  }

  std::vector<SolvedVariable> solved;
  std::size_t gi = 0, slot = 0;
  while (find_linear(gens, *ring, gi, slot)) {
    const Poly& g = gens[gi];
    Rational c = *g.coefficient_in(slot, 1).constant_value();
    Monomial m(ring->width());
    m[slot] = 1;
    Poly rest = g - Poly::term(ring, m, c);
    Poly image = rest * Rational(-1 / c);
    std::string var = ring->var(slot);
    Substitution s;
    s.assign(var, image);
    RingPtr smaller = ring_without(ring, {var});
    std::vector<Poly> next;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (k == gi) continue;
      Poly h = substitute(gens[k], s);
      if (!h.is_zero()) next.push_back(h.embed(smaller));
    }
    solved.push_back({var, image});
    gens = std::move(next);
    ring = smaller;
  }
  return Chart{j, uj, ring, std::move(solved), Ideal(ring, std::move(gens))};
}

std::vector<Chart> charts(const IncidenceScheme& X) {
  std::vector<Chart> out;
  for (std::size_t j = 0; j < X.proj_vars.size(); ++j) out.push_back(chart(X, j));
  return out;
}

Ideal rank_stratum_ideal(const PolyMatrix& phi, int p) {
  require_polynomial(phi, "rank_stratum_ideal");
  int m = static_cast<int>(phi.rows());
  if (p < 1 || p > m) throw Error("rank_stratum_ideal: p must lie in 1..m");
  std::size_t k = static_cast<std::size_t>(m - p + 1);
  std::vector<Poly> minors;
  for (const auto& rs : subsets(phi.rows(), k)) {
    for (const auto& cs : subsets(phi.cols(), k)) {
      Poly d = determinant(submatrix(phi, rs, cs), phi.ring());
      if (d.is_zero()) continue;
      if (std::find(minors.begin(), minors.end(), d) == minors.end() &&
          std::find(minors.begin(), minors.end(), -d) == minors.end()) {
        minors.push_back(std::move(d));
      }
    }
  }
  return Ideal(phi.ring(), std::move(minors));
}

BlowupReport blowup_criterion(const PolyMatrix& phi) {
  fitting_ideal(phi);
  BlowupReport report;
  report.ok = true;
  int n = static_cast<int>(phi.ring()->nvars());
  for (int p = 1; p <= static_cast<int>(phi.rows()); ++p) {
    Ideal I = rank_stratum_ideal(phi, p);
    StratumReport s;
    s.p = p;
    s.empty = is_unit_ideal(I);
    s.codim = s.empty ? n + 1 : n - dimension(I);
    s.ok = s.empty || s.codim >= p + 1;
    report.ok = report.ok && s.ok;
    report.strata.push_back(s);
  }
  return report;
}

}  // namespace degloci
