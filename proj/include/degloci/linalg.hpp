#pragma once

#include <optional>
#include <vector>

#include "degloci/rational.hpp"

namespace degloci {

/// Dense matrix over Q, row-major.
using QMatrix = std::vector<std::vector<Rational>>;

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(QMatrix& a);

/// Basis of {x : a x = 0}; `cols` is the number of unknowns.
std::vector<std::vector<Rational>> nullspace(QMatrix a, std::size_t cols);

Rational det(QMatrix a);
std::optional<QMatrix> inverse(const QMatrix& a);

}  // namespace degloci
