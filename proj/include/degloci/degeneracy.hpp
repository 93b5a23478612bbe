#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "degloci/groebner.hpp"
#include "degloci/poly.hpp"

namespace degloci {

/// m x (m+1) matrix of polynomials over one ring. The ring may carry a
/// Laurent parameter (matrix families). Generic surjectivity is checked by
/// the operations that need it, not here, so the zero matrix is a value.
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::vector<std::vector<Poly>> entries);
  static PolyMatrix parse(const RingPtr& ring, const std::vector<std::vector<std::string>>& entries);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return entries_.size(); }
  std::size_t cols() const { return entries_.front().size(); }
  const Poly& at(std::size_t i, std::size_t j) const { return entries_[i][j]; }
  const std::vector<std::vector<Poly>>& entries() const { return entries_; }

  /// Entrywise image.
  PolyMatrix map(const std::function<Poly(const Poly&)>& fn) const;
  PolyMatrix embed(const RingPtr& target) const;

  std::vector<std::vector<std::string>> strings() const;
  std::string str() const;

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

 private:
  RingPtr ring_;
  std::vector<std::vector<Poly>> entries_;
};

/// Square-matrix determinant by Laplace expansion along the first row.
Poly determinant(const std::vector<std::vector<Poly>>& square, const RingPtr& ring);

/// Product of two matrices over the same ring (shapes must agree).
std::vector<std::vector<Poly>> matmul(const std::vector<std::vector<Poly>>& a,
                                      const std::vector<std::vector<Poly>>& b);

/// Signed maximal minors: entry j is (-1)^j times the minor with column j
/// deleted, so that for a rank-m specialization the vector is a kernel vector.
std::vector<Poly> signed_maximal_minors(const PolyMatrix& phi);

/// Ideal of the maximal minors listed by deleted column. Throws
/// DegenerateMatrix when every minor vanishes.
Ideal fitting_ideal(const PolyMatrix& phi);

struct IncidenceScheme {
  RingPtr base;                         // x_1..x_n
  std::vector<std::string> proj_vars;   // u_0..u_m
  RingPtr ring;                         // base vars followed by proj vars
  std::vector<Poly> equations;          // row i of phi times u
};

/// Names of the homogeneous coordinates for an m x (m+1) matrix: alpha, beta
/// (m=1), alpha, beta, gamma (m=2), u0..um otherwise. Falls back to u0..um
/// when a base variable already uses one of the names.
std::vector<std::string> projective_names(std::size_t m, const Ring& base);

IncidenceScheme incidence_scheme(const PolyMatrix& phi);

/// One eliminated variable: var = image, image free of var.
struct SolvedVariable {
  std::string var;
  Poly image;
};

struct Chart {
  std::size_t index = 0;
  std::string chart_var;               // the u_j set to 1
  RingPtr ring;                        // remaining variables
  std::vector<SolvedVariable> solved;  // in elimination order
  Ideal ideal;                         // remaining relations (possibly none)

  /// Nonzero remaining relations as strings.
  std::vector<std::string> equation_strings() const { return ideal.generator_strings(); }
};

/// Affine chart u_j = 1, followed by repeated elimination of variables that
/// appear linearly with a constant coefficient in some relation.
Chart chart(const IncidenceScheme& X, std::size_t j);
std::vector<Chart> charts(const IncidenceScheme& X);

/// Ideal of the (m-p+1)-minors; 1 <= p <= m.
Ideal rank_stratum_ideal(const PolyMatrix& phi, int p);

struct StratumReport {
  int p = 0;
  int codim = 0;     // nvars + 1 for an empty stratum
  bool empty = false;
  bool ok = false;   // codim >= p + 1 or empty
};

struct BlowupReport {
  bool ok = false;
  std::vector<StratumReport> strata;
};

/// Codimension criterion identifying X(phi) with the blow-up of Z(phi).
BlowupReport blowup_criterion(const PolyMatrix& phi);

}  // namespace degloci
