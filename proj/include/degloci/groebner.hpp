#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "degloci/poly.hpp"

namespace degloci {

enum class OrderKind { Degrevlex, Lex, Block };

/// Monomial order description. Block orders compare the eliminated
/// variables first (degrevlex within the block), then the rest by degrevlex,
/// which makes them elimination orders for the block.
class MonomialOrder {
 public:
  static MonomialOrder degrevlex() { return MonomialOrder(OrderKind::Degrevlex, {}); }
  static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex, {}); }
  static MonomialOrder block(std::vector<std::string> elim) { return MonomialOrder(OrderKind::Block, std::move(elim)); }

  OrderKind kind() const { return kind_; }
  const std::vector<std::string>& elim_vars() const { return elim_; }
  std::string name() const;

  bool operator==(const MonomialOrder&) const = default;

 private:
  MonomialOrder(OrderKind kind, std::vector<std::string> elim) : kind_(kind), elim_(std::move(elim)) {}
  OrderKind kind_;
  std::vector<std::string> elim_;
};

/// A monomial order resolved against a concrete ring.
class BoundOrder {
 public:
  BoundOrder(const MonomialOrder& order, const Ring& ring);
  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;

 private:
  int degrevlex(const Monomial& a, const Monomial& b, bool in_block) const;

  OrderKind kind_;
  std::size_t n_;
  std::vector<bool> block_;
};

struct GroebnerOptions {
  /// Upper bound on elementary reduction steps before BudgetExceeded.
  std::size_t max_reductions = 1'000'000;
  /// Re-check that every S-polynomial of the result reduces to zero.
  bool verify = true;
};

/// Ideal of a polynomial ring: generators, a monomial order and a lazily
/// computed reduced Groebner basis. The cache is filled at most once and is
/// shared between copies.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Poly> generators, MonomialOrder order = MonomialOrder::degrevlex());

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return generators_; }
  const MonomialOrder& order() const { return order_; }

  bool has_basis() const;
  /// Reduced, monic Groebner basis sorted by decreasing leading monomial.
  const std::vector<Poly>& basis(const GroebnerOptions& opts = {}) const;

  Ideal with_order(MonomialOrder order) const { return Ideal(ring_, generators_, std::move(order)); }
  std::vector<std::string> generator_strings() const;

 private:
  struct Cache;
  RingPtr ring_;
  std::vector<Poly> generators_;
  MonomialOrder order_;
  std::shared_ptr<Cache> cache_;
};

/// Reduced Groebner basis of the generators under `order`.
std::vector<Poly> reduced_groebner_basis(const std::vector<Poly>& generators, const MonomialOrder& order,
                                         const GroebnerOptions& opts = {});

/// Returns I with its basis cache filled.
Ideal groebner_basis(const Ideal& I, const GroebnerOptions& opts = {});

/// Leading monomial of a nonzero polynomial under `order`.
Monomial leading_monomial(const Poly& f, const MonomialOrder& order);

/// Remainder of f modulo a Groebner basis (full reduction).
Poly reduce(const Poly& f, const std::vector<Poly>& basis, const MonomialOrder& order);

Poly normal_form(const Poly& f, const Ideal& I);
bool contains(const Ideal& I, const Poly& f);
bool is_unit_ideal(const Ideal& I);

/// Equality of ideals via reduced bases under I's order. Throws RingMismatch.
bool ideal_equal(const Ideal& I, const Ideal& J);

/// Krull dimension of the affine zero set, -1 for the unit ideal.
int dimension(const Ideal& I);
/// nvars - dimension; nvars + 1 for the unit ideal.
int codimension(const Ideal& I);

/// I intersected with the subring without `drop`, in that subring.
Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop);

/// Sum of two ideals in the same ring.
Ideal ideal_sum(const Ideal& I, const Ideal& J);

/// True iff every S-polynomial of `basis` reduces to zero modulo `basis`.
bool satisfies_buchberger_criterion(const std::vector<Poly>& basis, const MonomialOrder& order);

}  // namespace degloci
