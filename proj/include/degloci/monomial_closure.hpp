#pragma once

#include <string>
#include <vector>

namespace degloci {

using Exponent = std::vector<int>;

/// Monomial ideal given by its minimal generators (an antichain under
/// componentwise order), kept sorted lexicographically.
class MonomialIdeal {
 public:
  /// Reduces `gens` to its minimal elements. Throws on an empty list, on
  /// mixed lengths or on negative exponents.
  explicit MonomialIdeal(std::vector<Exponent> gens);

  std::size_t nvars() const { return gens_.front().size(); }
  const std::vector<Exponent>& generators() const { return gens_; }
  /// Some generator divides the monomial.
  bool contains(const Exponent& a) const;
  std::string str() const;

  bool operator==(const MonomialIdeal&) const = default;

 private:
  std::vector<Exponent> gens_;
};

/// Lattice point test for the Newton polyhedron conv(gens) + R^n_{>=0},
/// decided by an exact rational phase-I simplex.
bool in_newton_polyhedron(const MonomialIdeal& I, const Exponent& a);

/// Minimal generators of the integral closure. Candidates range over the box
/// bounded by the componentwise maximum of the generators.
MonomialIdeal integral_closure(const MonomialIdeal& I);

bool is_integrally_closed(const MonomialIdeal& I);

MonomialIdeal power(const MonomialIdeal& I, int k);

/// Closure of I and of I^2 in three variables. Throws UnsupportedDimension
/// for other n.
bool rrv_normal(const MonomialIdeal& I);

}  // namespace degloci
