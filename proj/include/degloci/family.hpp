#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "degloci/degeneracy.hpp"

namespace degloci {

/// One-parameter family phi_t over Q[x][t, 1/t] and the t-independent matrix
/// it is meant to certify.
struct MatrixFamily {
  PolyMatrix phi_t;
  PolyMatrix origin;
};

/// Data transforming origin into phi_t:
///   M = origin(linear_change(x))          (optional)
///   M = M(t^w x)                           (variable_weights)
///   M = diag(row_scales) * M * diag(col_scales)
///   M = row_ops * M * col_ops              (optional)
/// Scales are nonzero constants times powers of t; row_ops and col_ops must
/// have unit determinant c * t^k; the linear change must be invertible.
struct EquivalenceWitness {
  std::map<std::string, int> variable_weights;
  std::vector<Poly> row_scales;
  std::vector<Poly> col_scales;
  std::optional<std::vector<std::vector<Poly>>> row_ops;
  std::optional<std::vector<std::vector<Poly>>> col_ops;
  std::optional<Substitution> linear_change;
};

struct FlatnessReport {
  int n = 0;                           // base dimension
  std::vector<int> fiber0_chart_dims;  // per chart of X(phi_0)
  int fiber0_dim = 0;
  int total_dim = 0;                   // X(phi) with t as a variable
  bool ok = false;
};

}  // namespace degloci
