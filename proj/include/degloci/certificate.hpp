#pragma once

#include <string>
#include <variant>
#include <vector>

#include "degloci/degeneracy.hpp"
#include "degloci/family.hpp"
#include "degloci/groebner.hpp"

namespace degloci {

enum class CertKind { Smooth, NormalToric, FormMatch, Elkik, ChartCover, Unknown };

std::string kind_name(CertKind kind);

/// f = unit * (u*v - M), M a term free of u and v.
struct BinomialMatch {
  std::string u, v;
  Poly M;
  Rational unit;
};

/// f = unit * (u*v - u*M1 - v^d*M2), M1 and M2 terms free of u and v.
struct FormMatch {
  std::string u, v;
  int d = 0;
  Poly M1;
  Poly M2;
  Rational unit;
};

struct SmoothWitness {
  int generators = 0;  // complete intersection of this codimension
};

struct ToricWitness {
  BinomialMatch match;
  int singular_codim = 0;  // codimension of the singular locus inside V(f)
};

struct FormMatchWitness {
  FormMatch match;
  Substitution shift;  // v -> v + M1
  Poly shifted;        // (f / unit) after the shift
};

/// Hypersurface family F_t = weighted_scale(g, weights, 0) and its t = 0 fiber.
struct HypersurfaceFamily {
  std::map<std::string, int> weights;
  Poly family;
  Poly limit;
};

struct MatrixDegeneration {
  MatrixFamily family;
  EquivalenceWitness witness;
  FlatnessReport flatness;
};

struct ElkikWitness {
  std::variant<HypersurfaceFamily, MatrixDegeneration> data;
};

struct ChartCoverWitness {
  PolyMatrix matrix;
  std::vector<std::string> proj_vars;
  std::vector<std::vector<SolvedVariable>> solved;  // per chart
  BlowupReport blowup;
};

struct UnknownWitness {
  std::string reason;
};

using Witness = std::variant<SmoothWitness, ToricWitness, FormMatchWitness, ElkikWitness, ChartCoverWitness,
                             UnknownWitness>;

/// Proof tree that a scheme has rational singularities.
struct Certificate {
  CertKind kind;
  Ideal subject;
  std::string citation;
  Witness witness;
  std::vector<Certificate> children;

  /// No Unknown leaf anywhere in the tree.
  bool complete() const;
  /// Number of nodes of the given kind in the tree.
  int count(CertKind k) const;
  /// Largest total degree of M over the NormalToric leaves (uv = M); -1 if none.
  int max_toric_degree() const;
};

Certificate unknown_leaf(Ideal subject, std::string reason);

}  // namespace degloci
