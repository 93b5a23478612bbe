#include "degloci/monomial_closure.hpp"

#include <algorithm>
#include <stdexcept>

#include "degloci/errors.hpp"
#include "degloci/rational.hpp"

namespace degloci {

namespace {

bool leq(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

std::vector<Exponent> minimal_elements(std::vector<Exponent> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  std::vector<Exponent> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < v.size() && !dominated; ++j) {
      if (i != j && leq(v[j], v[i])) dominated = true;
    }
    if (!dominated) out.push_back(v[i]);
  }
  return out;
}

// Phase I of the simplex method on A x = b, x >= 0, b >= 0, with Bland's
// rule. Returns true iff the system is feasible.
bool feasible(std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
  std::size_t m = A.size(), n = A.front().size();
  // Tableau columns: n originals, m artificials, then the right-hand side.
  std::size_t width = n + m + 1;
  std::vector<std::vector<Rational>> T(m + 1, std::vector<Rational>(width, 0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) T[i][j] = A[i][j];
    T[i][n + i] = 1;
    T[i][width - 1] = b[i];
    basis[i] = n + i;
  }
  // Objective row: minimize the sum of artificials, written in reduced form.
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < width; ++j) {
      if (j >= n && j < n + m) continue;
      T[m][j] -= T[i][j];
    }
  }
  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (T[m][j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      Rational ratio = T[i][width - 1] / T[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot happen in phase I
    Rational piv = T[leave][enter];
    for (auto& x : T[leave]) x /= piv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      Rational f = T[i][enter];
      for (std::size_t j = 0; j < width; ++j) T[i][j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }
  return T[m][width - 1] == 0;
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::vector<Exponent> gens) {
  if (gens.empty()) throw Error("monomial ideal needs at least one generator");
  std::size_t n = gens.front().size();
  for (const auto& g : gens) {
    if (g.size() != n) throw Error("exponent vectors of different lengths");
    if (std::any_of(g.begin(), g.end(), [](int e) { return e < 0; })) throw Error("negative exponent");
  }
  gens_ = minimal_elements(std::move(gens));
}

bool MonomialIdeal::contains(const Exponent& a) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Exponent& g) { return leq(g, a); });
}

std::string MonomialIdeal::str() const {
  std::string s = "{";
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    s += k ? ", (" : "(";
    for (std::size_t i = 0; i < gens_[k].size(); ++i) s += (i ? "," : "") + std::to_string(gens_[k][i]);
    s += ")";
  }
  return s + "}";
}

bool in_newton_polyhedron(const MonomialIdeal& I, const Exponent& a) {
  if (a.size() != I.nvars()) throw Error("exponent length does not match the ideal");
  if (I.contains(a)) return true;
  const auto& g = I.generators();
  std::size_t n = a.size(), k = g.size();
  // Unknowns: lambda_1..lambda_k, slack_1..slack_n.
  // Rows: sum_j lambda_j g_j[i] + slack_i = a_i; sum_j lambda_j = 1.
  std::vector<std::vector<Rational>> A(n + 1, std::vector<Rational>(k + n, 0));
  std::vector<Rational> b(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) A[i][j] = g[j][i];
    A[i][k + i] = 1;
    b[i] = a[i];
  }
  for (std::size_t j = 0; j < k; ++j) A[n][j] = 1;
  b[n] = 1;
  return feasible(std::move(A), std::move(b));
}

MonomialIdeal integral_closure(const MonomialIdeal& I) {
  std::size_t n = I.nvars();
  Exponent bound(n, 0);
  for (const auto& g : I.generators()) {
    for (std::size_t i = 0; i < n; ++i) bound[i] = std::max(bound[i], g[i]);
  }
  std::vector<Exponent> members;
  Exponent cur(n, 0);
  for (;;) {
    if (in_newton_polyhedron(I, cur)) members.push_back(cur);
    std::size_t i = 0;
    while (i < n && cur[i] == bound[i]) cur[i++] = 0;
    if (i == n) break;
    ++cur[i];
  }
  MonomialIdeal closure(std::move(members));
  for (const auto& g : I.generators()) {
    if (!closure.contains(g)) throw std::logic_error("integral closure lost a generator");
  }
  for (const auto& g : closure.generators()) {
    if (!leq(g, bound)) throw std::logic_error("closure generator outside the search box");
  }
  return closure;
}

bool is_integrally_closed(const MonomialIdeal& I) { return integral_closure(I) == I; }

MonomialIdeal power(const MonomialIdeal& I, int k) {
  if (k < 1) throw Error("power exponent must be at least 1");
  std::vector<Exponent> cur = I.generators();
  for (int step = 1; step < k; ++step) {
    std::vector<Exponent> next;
    for (const auto& a : cur) {
      for (const auto& g : I.generators()) {
        Exponent s(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + g[i];
        next.push_back(std::move(s));
      }
    }
    cur = minimal_elements(std::move(next));
  }
  return MonomialIdeal(std::move(cur));
}

bool rrv_normal(const MonomialIdeal& I) {
  if (I.nvars() != 3) {
    throw UnsupportedDimension("the normality test applies in three variables; got " + std::to_string(I.nvars()));
  }
  return is_integrally_closed(I) && is_integrally_closed(power(I, 2));
}

}  // namespace degloci
