#include "degloci/poly.hpp"

#include <algorithm>
#include <numeric>

#include "degloci/errors.hpp"

namespace degloci {

int Monomial::degree(std::size_t nvars) const {
  int d = 0;
  for (std::size_t i = 0; i < nvars && i < exps.size(); ++i) d += exps[i];
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] > other.exps[i]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a.width());
  for (std::size_t i = 0; i < a.width(); ++i) r.exps[i] = a.exps[i] + b.exps[i];
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r(a.width());
  for (std::size_t i = 0; i < a.width(); ++i) r.exps[i] = a.exps[i] - b.exps[i];
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.width());
  for (std::size_t i = 0; i < a.width(); ++i) r.exps[i] = std::max(a.exps[i], b.exps[i]);
  return r;
}

Poly::Poly(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw Error("null ring");
}

Poly::Poly(RingPtr ring, TermMap terms) : ring_(std::move(ring)) {
  if (!ring_) throw Error("null ring");
  for (auto& [m, c] : terms) add_term(m, c);
}

Poly Poly::constant(RingPtr ring, const Rational& c) {
  Poly p(ring);
  p.add_term(Monomial(p.ring_->width()), c);
  return p;
}

Poly Poly::variable(RingPtr ring, std::string_view name) {
  Poly p(ring);
  Monomial m(p.ring_->width());
  m[p.ring_->require(name)] = 1;
  p.add_term(m, 1);
  return p;
}

Poly Poly::term(RingPtr ring, Monomial m, const Rational& c) {
  Poly p(ring);
  p.add_term(m, c);
  return p;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (m.width() != ring_->width()) throw Error("monomial width does not match ring");
  if (c == 0) return;
  for (std::size_t i = 0; i < ring_->nvars(); ++i) {
    if (m[i] < 0) throw Error("negative exponent on variable '" + ring_->var(i) + "'");
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::optional<Rational> Poly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) return std::nullopt;
  return terms_.begin()->second;
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::degree_in(std::size_t slot) const {
  int d = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    d = first ? m[slot] : std::max(d, m[slot]);
    first = false;
  }
  return d;
}

int Poly::min_degree_in(std::size_t slot) const {
  int d = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    d = first ? m[slot] : std::min(d, m[slot]);
    first = false;
  }
  return d;
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree(ring_->nvars()));
  return d;
}

std::vector<std::size_t> Poly::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ring_->width(); ++i) {
    if (involves(i)) out.push_back(i);
  }
  return out;
}

bool Poly::involves(std::size_t slot) const {
  return std::any_of(terms_.begin(), terms_.end(), [slot](const auto& t) { return t.first[slot] != 0; });
}

Poly Poly::coefficient_in(std::size_t slot, int e) const {
  Poly out(ring_);
  for (const auto& [m, c] : terms_) {
    if (m[slot] != e) continue;
    Monomial r = m;
    r[slot] = 0;
    out.add_term(r, c);
  }
  return out;
}

Poly Poly::derivative(std::size_t slot) const {
  Poly out(ring_);
  for (const auto& [m, c] : terms_) {
    if (m[slot] == 0) continue;
    Monomial r = m;
    r[slot] -= 1;
    out.add_term(r, c * m[slot]);
  }
  return out;
}

Poly Poly::embed(const RingPtr& target) const {
  if (same_ring(ring_, target)) return Poly(target, terms_);
  std::vector<std::optional<std::size_t>> map(ring_->width());
  for (std::size_t i = 0; i < ring_->width(); ++i) map[i] = target->index_of(ring_->var(i));
  if (ring_->has_laurent() && target->has_laurent() && ring_->laurent_name() != target->laurent_name()) {
    throw RingMismatch("Laurent parameters differ");
  }
  Poly out(target);
  for (const auto& [m, c] : terms_) {
    Monomial r(target->width());
    for (std::size_t i = 0; i < m.width(); ++i) {
      if (m[i] == 0) continue;
      if (!map[i]) throw UndeclaredVariable(ring_->var(i));
      std::size_t j = *map[i];
      bool target_is_laurent = target->has_laurent() && j == target->laurent_slot();
      if (m[i] < 0 && !target_is_laurent) throw PoleError("negative power of '" + ring_->var(i) + "'");
      r[j] += m[i];
    }
    out.add_term(r, c);
  }
  return out;
}

void Poly::check_ring(const Poly& o) const {
  if (!same_ring(ring_, o.ring_)) throw RingMismatch("polynomials live in different rings");
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  check_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_ring(b);
  Poly out(a.ring_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(ring_, 1);
  Poly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const Poly& a, const Poly& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != ring_->width()) throw Error("evaluation point has wrong dimension");
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < m.width(); ++i) {
      if (m[i] != 0) v *= degloci::pow(point[i], m[i]);
    }
    sum += v;
  }
  return sum;
}

namespace {

// Descending print order: total degree, then reverse lexicographic, then the
// Laurent exponent.
bool print_before(const Monomial& a, const Monomial& b, std::size_t nvars) {
  int da = a.degree(nvars), db = b.degree(nvars);
  if (da != db) return da > db;
  for (std::size_t i = nvars; i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  if (a.width() > nvars && a[nvars] != b[nvars]) return a[nvars] > b[nvars];
  return false;
}

std::string monomial_text(const Ring& ring, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.width(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.var(i);
    if (m[i] != 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

}  // namespace

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::size_t nvars = ring_->nvars();
  std::stable_sort(order.begin(), order.end(),
                   [nvars](auto* a, auto* b) { return print_before(a->first, b->first, nvars); });
  std::string out;
  bool first = true;
  for (const auto* t : order) {
    Rational c = t->second;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono = monomial_text(*ring_, t->first);
    if (mono.empty()) {
      out += to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += to_string(c) + '*' + mono;
    }
  }
  return out;
}

void Substitution::assign(const std::string& var, Poly image) {
  assignments_.insert_or_assign(var, std::move(image));
}

Poly substitute(const Poly& f, const Substitution& s) {
  const RingPtr& ring = f.ring();
  std::vector<std::optional<Poly>> images(ring->width());
  for (const auto& [name, image] : s.assignments()) {
    auto slot = ring->index_of(name);
    if (!slot) throw UndeclaredVariable(name);
    if (ring->has_laurent() && *slot == ring->laurent_slot()) {
      throw Error("the Laurent parameter cannot be substituted; use set_t");
    }
    if (!same_ring(image.ring(), ring)) {
      throw RingMismatch("substitution image for '" + name + "' lives in another ring");
    }
    images[*slot] = image;
  }
  // Cache of powers per slot.
  std::vector<std::vector<Poly>> powers(ring->width());
  auto power_of = [&](std::size_t slot, int e) -> const Poly& {
    auto& cache = powers[slot];
    if (cache.empty()) cache.push_back(Poly::constant(ring, 1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * *images[slot]);
    return cache[e];
  };
  Poly out(ring);
  for (const auto& [m, c] : f.terms()) {
    Monomial fixed = m;
    Poly acc = Poly::constant(ring, c);
    for (std::size_t i = 0; i < m.width(); ++i) {
      if (m[i] == 0 || !images[i]) continue;
      fixed[i] = 0;
      acc *= power_of(i, m[i]);
    }
    acc *= Poly::term(ring, fixed, 1);
    out += acc;
  }
  return out;
}

Substitution compose(const Substitution& s2, const Substitution& s1) {
  Substitution out;
  for (const auto& [name, image] : s1.assignments()) out.assign(name, substitute(image, s2));
  for (const auto& [name, image] : s2.assignments()) {
    if (!s1.assignments().count(name)) out.assign(name, image);
  }
  return out;
}

Poly weighted_scale(const Poly& f, const std::map<std::string, int>& weights, int negate_power,
                    const std::string& param) {
  RingPtr target = ring_with_laurent(f.ring(), param);
  std::vector<int> w(f.ring()->nvars(), 0);
  for (std::size_t i = 0; i < f.ring()->nvars(); ++i) {
    auto it = weights.find(f.ring()->var(i));
    if (it != weights.end()) {
      w[i] = it->second;
    } else if (f.involves(i)) {
      throw PreconditionFailed("no weight given for variable '" + f.ring()->var(i) + "'");
    }
  }
  std::size_t tslot = target->laurent_slot();
  Poly out(target);
  for (const auto& [m, c] : f.terms()) {
    Monomial r(target->width());
    int tpow = -negate_power;
    for (std::size_t i = 0; i < f.ring()->nvars(); ++i) {
      r[i] = m[i];
      tpow += w[i] * m[i];
    }
    if (f.ring()->has_laurent()) tpow += m[f.ring()->laurent_slot()];
    r[tslot] = tpow;
    out.add_term(r, c);
  }
  return out;
}

Poly set_t(const Poly& f, const Rational& value) {
  if (!f.ring()->has_laurent()) return f;
  RingPtr target = ring_without_laurent(f.ring());
  std::size_t tslot = f.ring()->laurent_slot();
  Poly out(target);
  for (const auto& [m, c] : f.terms()) {
    int e = m[tslot];
    if (value == 0 && e < 0) {
      throw PoleError("negative power of '" + f.ring()->laurent_name() + "' at " +
                      f.ring()->laurent_name() + " = 0");
    }
    Rational factor = (value == 0) ? Rational(e == 0 ? 1 : 0) : degloci::pow(value, e);
    if (factor == 0) continue;
    Monomial r(target->width());
    for (std::size_t i = 0; i < target->width(); ++i) r[i] = m[i];
    out.add_term(r, c * factor);
  }
  return out;
}

Poly laurent_as_polynomial(const Poly& f) {
  if (!f.ring()->has_laurent()) return f;
  auto [lo, hi] = t_range(f);
  if (lo < 0) throw PoleError("negative power of '" + f.ring()->laurent_name() + "'");
  std::vector<std::string> vars = f.ring()->vars();
  vars.push_back(f.ring()->laurent_name());
  RingPtr target = make_ring(std::move(vars));
  return Poly(target, f.terms());
}

Poly truncate(const Poly& f, int d) {
  Poly out(f.ring());
  std::size_t n = f.ring()->nvars();
  for (const auto& [m, c] : f.terms()) {
    if (m.degree(n) <= d) out.add_term(m, c);
  }
  return out;
}

std::pair<int, int> t_range(const Poly& f) {
  if (!f.ring()->has_laurent() || f.is_zero()) return {0, 0};
  std::size_t slot = f.ring()->laurent_slot();
  return {f.min_degree_in(slot), f.degree_in(slot)};
}

}  // namespace degloci
