#pragma once

#include <optional>

#include "degloci/certificate.hpp"
#include "degloci/degeneracy.hpp"
#include "degloci/groebner.hpp"

namespace degloci {

/// I plus the c x c minors of the Jacobian of its c nonzero generators.
/// Requires a complete intersection (dimension n - c), otherwise throws
/// UnsupportedShape. The unit ideal maps to itself; the zero ideal to (1).
Ideal jacobian_ideal(const Ideal& I);

bool is_smooth(const Ideal& I);

/// f = c * (u*v - M) with M a term free of u, v; first (u, v), u before v
/// in ring order, wins.
std::optional<BinomialMatch> match_binomial_form(const Poly& f);

/// f = c * (u*v - u*M1 - v^d*M2); ordered pairs (u, v) are scanned in ring
/// order and the first match wins.
std::optional<FormMatch> match_lemma_form(const Poly& f);

/// Singular locus of V(f) has codimension >= 2 in V(f). Throws FormError when
/// f is not binomial.
bool toric_normal(const Poly& f);

struct CertifyOptions {
  GroebnerOptions groebner;
  int max_depth = 8;
  /// Worker threads for chart covers; 0 picks the hardware concurrency.
  unsigned threads = 1;
};

/// Catalog certification of one affine piece: smooth, normal toric binomial,
/// or the lemma form reduced to a toric limit through an isotrivial family.
/// Anything else, or an exhausted budget, yields an Unknown leaf.
Certificate certify_ideal(const Ideal& I, const CertifyOptions& opts = {});
Certificate certify_rational(const Chart& C, const CertifyOptions& opts = {});

/// Equations of X(phi) as an ideal of the incidence ring.
Ideal incidence_ideal(const PolyMatrix& phi);

/// Chart cover of X(phi) with one certificate per standard chart.
Certificate certify_matrix(const PolyMatrix& phi, const CertifyOptions& opts = {});

}  // namespace degloci
