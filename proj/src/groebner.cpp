#include "degloci/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <set>

#include "degloci/errors.hpp"

namespace degloci {

std::string MonomialOrder::name() const {
  switch (kind_) {
    case OrderKind::Degrevlex:
      return "degrevlex";
    case OrderKind::Lex:
      return "lex";
    case OrderKind::Block: {
      std::string s = "block(";
      for (std::size_t i = 0; i < elim_.size(); ++i) s += (i ? "," : "") + elim_[i];
      return s + ")";
    }
  }
  return "?";
}

BoundOrder::BoundOrder(const MonomialOrder& order, const Ring& ring)
    : kind_(order.kind()), n_(ring.width()), block_(ring.width(), false) {
  if (ring.has_laurent()) throw Error("Groebner computations need a polynomial ring (no Laurent parameter)");
  for (const auto& v : order.elim_vars()) block_[ring.require(v)] = true;
}

int BoundOrder::degrevlex(const Monomial& a, const Monomial& b, bool in_block) const {
  int da = 0, db = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (block_[i] != in_block) continue;
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = n_; i-- > 0;) {
    if (block_[i] != in_block) continue;
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

int BoundOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case OrderKind::Lex:
      for (std::size_t i = 0; i < n_; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    case OrderKind::Degrevlex:
      return degrevlex(a, b, false);
    case OrderKind::Block: {
      int c = degrevlex(a, b, true);
      return c != 0 ? c : degrevlex(a, b, false);
    }
  }
  return 0;
}

namespace {

struct Desc {
  const BoundOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->compare(a, b) > 0; }
};

using Work = std::map<Monomial, Rational, Desc>;

// Polynomial as terms sorted by decreasing monomial, leading coefficient 1.
struct OPoly {
  std::vector<std::pair<Monomial, Rational>> terms;
  const Monomial& lm() const { return terms.front().first; }
  bool zero() const { return terms.empty(); }
};

OPoly to_opoly(const Poly& f, const BoundOrder& order) {
  OPoly out;
  out.terms.assign(f.terms().begin(), f.terms().end());
  std::sort(out.terms.begin(), out.terms.end(),
            [&](const auto& a, const auto& b) { return order.compare(a.first, b.first) > 0; });
  return out;
}

OPoly from_work(const Work& w) {
  OPoly out;
  out.terms.assign(w.begin(), w.end());
  return out;
}

void make_monic(OPoly& p) {
  if (p.zero()) return;
  Rational lc = p.terms.front().second;
  if (lc == 1) return;
  for (auto& t : p.terms) t.second /= lc;
}

Poly to_poly(const OPoly& p, const RingPtr& ring) {
  Poly out(ring);
  for (const auto& [m, c] : p.terms) out.add_term(m, c);
  return out;
}

class Reducer {
 public:
  Reducer(const BoundOrder& order, std::size_t budget) : order_(order), budget_(budget) {}

  // Full reduction of f modulo the live entries of basis.
  OPoly reduce(const OPoly& f, const std::vector<OPoly>& basis, const std::vector<bool>* alive = nullptr) {
    Work work(Desc{&order_});
    for (const auto& t : f.terms) work.emplace(t.first, t.second);
    Work rest(Desc{&order_});
    while (!work.empty()) {
      auto top = work.begin();
      const OPoly* divisor = nullptr;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (alive && !(*alive)[i]) continue;
        if (!basis[i].zero() && basis[i].lm().divides(top->first)) {
          divisor = &basis[i];
          break;
        }
      }
      if (!divisor) {
        rest.emplace(top->first, top->second);
        work.erase(top);
        continue;
      }
      if (++steps_ > budget_) throw BudgetExceeded("Groebner reduction budget exceeded");
      Monomial shift = top->first / divisor->lm();
      Rational factor = top->second / divisor->terms.front().second;
      for (const auto& [m, c] : divisor->terms) {
        Monomial key = shift * m;
        auto [it, inserted] = work.try_emplace(key, -factor * c);
        if (!inserted) {
          it->second -= factor * c;
          if (it->second == 0) work.erase(it);
        }
      }
    }
    return from_work(rest);
  }

  OPoly spoly(const OPoly& f, const OPoly& g) {
    Monomial l = lcm(f.lm(), g.lm());
    Work work(Desc{&order_});
    auto add = [&](const OPoly& p, const Rational& scale) {
      Monomial shift = l / p.lm();
      Rational s = scale / p.terms.front().second;
      for (const auto& [m, c] : p.terms) {
        Monomial key = shift * m;
        auto [it, inserted] = work.try_emplace(key, s * c);
        if (!inserted) {
          it->second += s * c;
          if (it->second == 0) work.erase(it);
        }
      }
    };
    add(f, 1);
    add(g, -1);
    return from_work(work);
  }

 private:
  const BoundOrder& order_;
  std::size_t budget_;
  std::size_t steps_ = 0;
};

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.width(); ++i) {
    if (a[i] && b[i]) return false;
  }
  return true;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  int degree;
};

std::vector<OPoly> buchberger(std::vector<OPoly> input, const BoundOrder& order, std::size_t nvars,
                              const GroebnerOptions& opts) {
  Reducer red(order, opts.max_reductions);
  std::vector<OPoly> G;
  std::vector<bool> alive;
  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> open;

  auto add = [&](OPoly h) {
    make_monic(h);
    std::size_t k = G.size();
    G.push_back(std::move(h));
    alive.push_back(true);
    for (std::size_t i = 0; i < k; ++i) {
      if (!alive[i]) continue;
      Monomial l = lcm(G[i].lm(), G[k].lm());
      pending.push_back({i, k, l, l.degree(nvars)});
      open.insert({i, k});
    }
    // Elements whose leading monomial is a multiple of the new one are
    // redundant for the final basis but still take part in pairs already
    // queued; they are dropped during minimalization.
  };

  for (auto& f : input) {
    if (f.zero()) continue;
    OPoly r = red.reduce(f, G, &alive);
    if (!r.zero()) add(std::move(r));
  }

  // Normal strategy: smallest lcm degree, ties by lex-smallest lcm, then indices.
  auto better = [&](const Pair& a, const Pair& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.lcm.exps != b.lcm.exps) return a.lcm.exps < b.lcm.exps;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  };

  while (!pending.empty()) {
    auto best = std::min_element(pending.begin(), pending.end(), better);
    Pair p = *best;
    pending.erase(best);
    open.erase({p.i, p.j});

    if (coprime(G[p.i].lm(), G[p.j].lm())) continue;
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == p.i || k == p.j || !alive[k]) continue;
      if (!G[k].lm().divides(p.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (!open.count(key(p.i, k)) && !open.count(key(p.j, k))) chain = true;
    }
    if (chain) continue;

    OPoly s = red.spoly(G[p.i], G[p.j]);
    OPoly r = red.reduce(s, G, &alive);
    if (!r.zero()) add(std::move(r));
  }

  // Minimalize.
  std::vector<OPoly> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      if (G[j].lm().divides(G[i].lm())) {
        // Equal leading monomials: keep the lower index only.
        redundant = G[j].lm() != G[i].lm() || j < i;
      }
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  // Interreduce tails.
  std::vector<OPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<OPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    OPoly head;
    head.terms.push_back(minimal[i].terms.front());
    OPoly tail;
    tail.terms.assign(minimal[i].terms.begin() + 1, minimal[i].terms.end());
    OPoly rt = red.reduce(tail, others);
    head.terms.insert(head.terms.end(), rt.terms.begin(), rt.terms.end());
    make_monic(head);
    reduced.push_back(std::move(head));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const OPoly& a, const OPoly& b) { return order.compare(a.lm(), b.lm()) > 0; });
  return reduced;
}

}  // namespace

Monomial leading_monomial(const Poly& f, const MonomialOrder& order) {
  if (f.is_zero()) throw Error("zero polynomial has no leading monomial");
  BoundOrder bo(order, *f.ring());
  const Monomial* best = nullptr;
  for (const auto& [m, c] : f.terms()) {
    if (!best || bo.compare(m, *best) > 0) best = &m;
  }
  return *best;
}

std::vector<Poly> reduced_groebner_basis(const std::vector<Poly>& generators, const MonomialOrder& order,
                                         const GroebnerOptions& opts) {
  if (generators.empty()) return {};
  const RingPtr& ring = generators.front().ring();
  BoundOrder bo(order, *ring);
  std::vector<OPoly> input;
  for (const auto& g : generators) {
    if (!same_ring(g.ring(), ring)) throw RingMismatch("generators live in different rings");
    input.push_back(to_opoly(g, bo));
  }
  std::vector<OPoly> basis = buchberger(std::move(input), bo, ring->nvars(), opts);
  std::vector<Poly> out;
  for (const auto& b : basis) out.push_back(to_poly(b, ring));
  if (opts.verify && !satisfies_buchberger_criterion(out, order)) {
    throw std::logic_error("Groebner basis failed the S-polynomial check");
  }
  return out;
}

bool satisfies_buchberger_criterion(const std::vector<Poly>& basis, const MonomialOrder& order) {
  if (basis.empty()) return true;
  const RingPtr& ring = basis.front().ring();
  BoundOrder bo(order, *ring);
  std::vector<OPoly> G;
  for (const auto& b : basis) G.push_back(to_opoly(b, bo));
  Reducer red(bo, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      if (!red.reduce(red.spoly(G[i], G[j]), G).zero()) return false;
    }
  }
  return true;
}

Poly reduce(const Poly& f, const std::vector<Poly>& basis, const MonomialOrder& order) {
  BoundOrder bo(order, *f.ring());
  std::vector<OPoly> G;
  for (const auto& b : basis) {
    if (!same_ring(b.ring(), f.ring())) throw RingMismatch("polynomial and basis live in different rings");
    G.push_back(to_opoly(b, bo));
  }
  Reducer red(bo, static_cast<std::size_t>(-1));
  return to_poly(red.reduce(to_opoly(f, bo), G), f.ring());
}

struct Ideal::Cache {
  std::once_flag once;
  std::atomic<bool> done{false};
  std::vector<Poly> basis;
};

Ideal::Ideal(RingPtr ring, std::vector<Poly> generators, MonomialOrder order)
    : ring_(std::move(ring)), generators_(std::move(generators)), order_(std::move(order)),
      cache_(std::make_shared<Cache>()) {
  if (ring_->has_laurent()) throw Error("ideals live in polynomial rings (no Laurent parameter)");
  for (auto& g : generators_) {
    if (!same_ring(g.ring(), ring_)) g = g.embed(ring_);
  }
  BoundOrder check(order_, *ring_);
  (void)check;
}

bool Ideal::has_basis() const { return cache_->done.load(); }

const std::vector<Poly>& Ideal::basis(const GroebnerOptions& opts) const {
  std::call_once(cache_->once, [&] {
    std::vector<Poly> nonzero;
    for (const auto& g : generators_) {
      if (!g.is_zero()) nonzero.push_back(g);
    }
    cache_->basis = reduced_groebner_basis(nonzero, order_, opts);
    cache_->done = true;
  });
  return cache_->basis;
}

std::vector<std::string> Ideal::generator_strings() const {
  std::vector<std::string> out;
  for (const auto& g : generators_) out.push_back(g.str());
  return out;
}

Ideal groebner_basis(const Ideal& I, const GroebnerOptions& opts) {
  I.basis(opts);
  return I;
}

Poly normal_form(const Poly& f, const Ideal& I) {
  Poly g = same_ring(f.ring(), I.ring()) ? f : f.embed(I.ring());
  return reduce(g, I.basis(), I.order());
}

bool contains(const Ideal& I, const Poly& f) { return normal_form(f, I).is_zero(); }

bool is_unit_ideal(const Ideal& I) {
  const auto& b = I.basis();
  return b.size() == 1 && b.front().is_constant();
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
  if (!same_ring(I.ring(), J.ring())) throw RingMismatch("ideals live in different rings");
  const auto& a = I.basis();
  Ideal J2 = J.order() == I.order() ? J : J.with_order(I.order());
  const auto& b = J2.basis();
  return a == b;
}

int dimension(const Ideal& I) {
  const auto& basis = I.basis();
  std::size_t n = I.ring()->nvars();
  std::vector<std::uint64_t> supports;
  for (const auto& g : basis) {
    Monomial lm = leading_monomial(g, I.order());
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (lm[i] > 0) mask |= std::uint64_t{1} << i;
    }
    if (mask == 0) return -1;
    supports.push_back(mask);
  }
  if (n > 24) throw UnsupportedShape("dimension: too many variables for subset enumeration");
  int best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    int size = __builtin_popcountll(s);
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [s](std::uint64_t m) { return (m & ~s) == 0; });
    if (independent) best = size;
  }
  return best;
}

int codimension(const Ideal& I) {
  int d = dimension(I);
  int n = static_cast<int>(I.ring()->nvars());
  return d < 0 ? n + 1 : n - d;
}

Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop) {
  for (const auto& v : drop) I.ring()->require(v);
  Ideal blocked = I.order().kind() == OrderKind::Block && I.order().elim_vars() == drop
                      ? I
                      : I.with_order(MonomialOrder::block(drop));
  RingPtr sub = ring_without(I.ring(), drop);
  std::vector<std::size_t> dropped;
  for (const auto& v : drop) dropped.push_back(I.ring()->require(v));
  std::vector<Poly> kept;
  for (const auto& g : blocked.basis()) {
    bool free = std::none_of(dropped.begin(), dropped.end(), [&](std::size_t s) { return g.involves(s); });
    if (free) kept.push_back(g.embed(sub));
  }
  return Ideal(sub, std::move(kept));
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  if (!same_ring(I.ring(), J.ring())) throw RingMismatch("ideals live in different rings");
  std::vector<Poly> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return Ideal(I.ring(), std::move(gens), I.order());
}

}  // namespace degloci
