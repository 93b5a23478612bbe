#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "degloci/rational.hpp"
#include "degloci/ring.hpp"

namespace degloci {

/// Exponent vector over a ring's slots. Zero exponents are stored densely;
/// two monomials of the same ring are equal iff their vectors are equal.
struct Monomial {
  std::vector<int> exps;

  Monomial() = default;
  explicit Monomial(std::size_t width) : exps(width, 0) {}
  explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

  std::size_t width() const { return exps.size(); }
  int operator[](std::size_t i) const { return exps[i]; }
  int& operator[](std::size_t i) { return exps[i]; }

  /// Sum of the first `nvars` exponents (the Laurent slot is excluded).
  int degree(std::size_t nvars) const;
  bool is_one() const;
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; caller guarantees b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  auto operator<=>(const Monomial&) const = default;
};

/// Sparse polynomial with exact rational coefficients. Immutable in spirit:
/// all operations return new values; no term carries a zero coefficient.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit Poly(RingPtr ring);
  Poly(RingPtr ring, TermMap terms);

  static Poly constant(RingPtr ring, const Rational& c);
  static Poly variable(RingPtr ring, std::string_view name);
  static Poly term(RingPtr ring, Monomial m, const Rational& c);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value when constant (zero included).
  std::optional<Rational> constant_value() const;
  /// Coefficient of monomial m (zero if absent).
  Rational coefficient(const Monomial& m) const;

  int degree_in(std::size_t slot) const;
  int min_degree_in(std::size_t slot) const;
  int total_degree() const;
  /// Slots with a nonzero exponent in some term.
  std::vector<std::size_t> support() const;
  bool involves(std::size_t slot) const;

  /// Coefficient of slot^e viewed as a polynomial in that slot.
  Poly coefficient_in(std::size_t slot, int e) const;
  Poly derivative(std::size_t slot) const;

  /// Same polynomial in another ring; variables are matched by name.
  /// Throws UndeclaredVariable when a used variable is missing from target.
  Poly embed(const RingPtr& target) const;

  Poly pow(unsigned e) const;
  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

  /// Equal rings (by value) and equal term maps.
  friend bool operator==(const Poly& a, const Poly& b);

  /// Canonical text, parseable back by parse_poly.
  std::string str() const;

  /// Exact evaluation at a rational point given by slot; Laurent slot included.
  Rational evaluate(const std::vector<Rational>& point) const;

  void add_term(const Monomial& m, const Rational& c);

 private:
  void check_ring(const Poly& o) const;

  RingPtr ring_;
  TermMap terms_;
};

/// Variable name -> image polynomial; unassigned variables map to themselves.
class Substitution {
 public:
  Substitution() = default;
  explicit Substitution(std::map<std::string, Poly> assignments) : assignments_(std::move(assignments)) {}

  void assign(const std::string& var, Poly image);
  const std::map<std::string, Poly>& assignments() const { return assignments_; }
  bool empty() const { return assignments_.empty(); }

 private:
  std::map<std::string, Poly> assignments_;
};

/// Replaces each assigned variable and expands. Images must live in f's ring.
/// The Laurent parameter cannot be assigned (use set_t).
Poly substitute(const Poly& f, const Substitution& s);

/// s2 after s1: x -> substitute(s1(x), s2), plus s2's own assignments for
/// variables s1 leaves fixed.
Substitution compose(const Substitution& s2, const Substitution& s1);

/// t^(-negate_power) * f(t^{w(x)} x, ...) in the ring of f extended by the
/// Laurent parameter `param`. Weights are required for every variable that
/// occurs in f; weights for other variables are ignored.
Poly weighted_scale(const Poly& f, const std::map<std::string, int>& weights, int negate_power,
                    const std::string& param = "t");

/// Specializes the Laurent parameter to `value` and drops it from the ring.
/// Throws PoleError on a negative power when value is 0.
Poly set_t(const Poly& f, const Rational& value);

/// Re-reads the Laurent parameter as an ordinary (last) polynomial variable.
/// Throws PoleError on any negative power.
Poly laurent_as_polynomial(const Poly& f);

/// Lowest and highest power of the Laurent parameter (0,0 for zero).
std::pair<int, int> t_range(const Poly& f);

/// Terms of total degree <= d in the ordinary variables. Power series inputs
/// are supplied as truncations; this makes the cut explicit.
Poly truncate(const Poly& f, int d);

}  // namespace degloci
