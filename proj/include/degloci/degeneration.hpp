#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "degloci/certificate.hpp"
#include "degloci/family.hpp"

namespace degloci {

/// c * t^k in the Laurent extension of `base` (parameter "t").
Poly t_monomial(const RingPtr& base, int k, const Rational& c = 1);

/// phi_t[i][j] = rows[i] * cols[j] * origin[i][j](t^w x). Throws PoleError
/// when a negative power of t survives.
MatrixFamily build_family(const PolyMatrix& origin, const std::map<std::string, int>& weights,
                          const std::vector<Poly>& row_clearings, const std::vector<Poly>& col_clearings);

/// The family's t = 0 fiber.
PolyMatrix fiber0(const MatrixFamily& F);

/// The witness applied to F.origin (see EquivalenceWitness). Throws
/// PreconditionFailed when the witness is malformed or not invertible.
PolyMatrix apply_witness(const MatrixFamily& F, const EquivalenceWitness& W);

/// Exact identity apply_witness(F, W) == F.phi_t; false on any failure.
bool verify_isotriviality(const MatrixFamily& F, const EquivalenceWitness& W);
/// The reason verify_isotriviality fails, empty when it holds.
std::string isotriviality_failure(const MatrixFamily& F, const EquivalenceWitness& W);

FlatnessReport verify_flat_degeneration(const MatrixFamily& F);

/// ElkikNode for X(F.origin). Throws PreconditionFailed naming the failed
/// check when the witness, the flatness report or the limit certificate
/// does not hold up.
Certificate elkik_node(const MatrixFamily& F, const EquivalenceWitness& W,
                       const std::optional<FlatnessReport>& flatness, const Certificate& limit_cert);

/// Constant invertible P, Q with P * source * Q == target, when they exist.
/// Both matrices must have constant-coefficient entries linear in the base
/// variables and live in the same ring.
std::optional<std::pair<std::vector<std::vector<Poly>>, std::vector<std::vector<Poly>>>> find_constant_equivalence(
    const PolyMatrix& source, const PolyMatrix& target);

}  // namespace degloci
