#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "degloci/certificate.hpp"
#include "degloci/degeneracy.hpp"
#include "degloci/singularity.hpp"

namespace degloci {

/// Expected chart equation `lhs = rhs` on the chart where `chart_var` = 1.
/// Compared after substituting the chart's solved variables, up to a
/// nonzero constant.
struct ExpectedChart {
  std::string chart_var;
  std::string equation;
  /// Expected root kind of the chart's certificate.
  CertKind kind = CertKind::Smooth;
  std::string note;
};

/// One step from a matrix to a simpler one through a family whose fibers for
/// t != 0 are equivalent to the source.
struct DegenerationStep {
  enum class Kind { Scaling, ConstantEquivalence };
  Kind kind = Kind::Scaling;
  std::string label;
  // Scaling: phi_t = diag(t^rows) * source(t^w x) * diag(t^cols).
  std::map<std::string, int> weights;
  std::vector<int> row_powers;
  std::vector<int> col_powers;
  /// Family as transcribed, compared entrywise with the computed one.
  std::optional<std::vector<std::vector<std::string>>> quoted_family;
  // ConstantEquivalence: P * source(L x) * Q == target for constant P, Q.
  std::map<std::string, std::string> linear_change;
  std::vector<std::vector<std::string>> target;
};

struct PaperInstance {
  std::string id;
  std::vector<std::string> vars;
  std::vector<std::vector<std::string>> matrix;
  /// Generators of the expected degeneracy ideal (empty: not checked).
  std::vector<std::string> fitting;
  std::vector<DegenerationStep> chain;
  /// Charts of the last matrix in the chain.
  std::vector<ExpectedChart> charts;
  /// Negative control: expected to fail certification.
  bool control = false;
  std::string citation;
  std::string note;

  PolyMatrix parsed() const;
};

/// Branch of the reduction for ((x + h(z), y, 0), (f(y, z), z, x)) with h, f
/// in m^2: Case2 when h has a z^2 term, Case1 when h lies in m^3 and f has a
/// quadratic part. Neither is reported as such, never resolved.
enum class TwoThreeBranch { Case1, Case2, Neither };

struct TwoThreeSplit {
  TwoThreeBranch branch = TwoThreeBranch::Neither;
  Poly h;
  Poly f;
  std::string detail;
};

/// nullopt when phi does not have that shape in its first three variables.
std::optional<TwoThreeSplit> two_three_split(const PolyMatrix& phi);

/// Catalog ids in report order (controls last).
std::vector<std::string> instance_ids(bool include_controls = false);

/// Throws UnknownInstance. `seed` drives the randomized generic trial.
PaperInstance instance(const std::string& id, std::uint64_t seed = 1);

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct InstanceResult {
  std::string id;
  bool pass = false;
  std::vector<Check> checks;
  std::vector<BlowupReport> blowups;  // one per matrix of the chain
  std::vector<std::string> matrices;  // the chain's matrices, origin first
  std::optional<Certificate> certificate;
  std::vector<std::string> diffs;     // failed checks, one line each
};

struct PipelineSummary {
  int total = 0;
  int passed = 0;
  int failed = 0;
  int complete_certificates = 0;
  int elkik_nodes = 0;
  int max_toric_degree = -1;
  std::vector<std::string> notes;
};

struct PipelineReport {
  std::string name;
  std::vector<InstanceResult> instances;
  PipelineSummary summary;

  bool all_pass() const { return summary.failed == 0; }
};

struct SuiteOptions {
  CertifyOptions certify;
  std::uint64_t seed = 1;
  /// Instances run concurrently; the report does not depend on this.
  unsigned threads = 1;
};

/// Runs one catalog entry: degeneracy ideal, blow-up criterion on every
/// matrix of the chain, golden charts, certificate construction and
/// re-validation.
InstanceResult run_instance(const PaperInstance& inst, const SuiteOptions& opts = {});

/// (x^d, y) for d = 1..d_max; an empty report when d_max < 1.
PipelineReport verify_genus2(int d_max, const SuiteOptions& opts = {});

/// Every non-control genus-3 instance, or the single instance `only`.
PipelineReport verify_genus3(const std::optional<std::string>& only = std::nullopt, const SuiteOptions& opts = {});

}  // namespace degloci
