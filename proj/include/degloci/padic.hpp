#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "degloci/poly.hpp"
#include "degloci/rational.hpp"

namespace degloci {

struct PadicConfig {
  int p = 5;
  int K = 8;
  std::uint64_t N = 1'000'000;
  std::uint64_t seed = 1;
  /// Tracked target centers (integers, reduced mod p^K). 0 is always tracked.
  std::vector<long long> centers;
  /// Worker threads; results do not depend on this.
  unsigned threads = 1;

  /// Throws ConfigError unless p is a prime in [2, 100], 1 <= K <= 12 and
  /// N >= 10^4.
  void validate() const;
};

struct LevelEstimate {
  int k = 0;
  std::uint64_t hits = 0;
  double density = 0;  // p^k * hits / N
  double stderr_ = 0;
};

struct CenterProfile {
  long long center = 0;
  std::vector<LevelEstimate> levels;  // k = 0..K
};

/// Pooled density over the valuation shell p^nu Z_p^x (nu < K):
/// hits / (N * p^-nu * (1 - 1/p)).
struct ShellEstimate {
  int nu = 0;
  std::uint64_t hits = 0;
  double density = 0;
  double stderr_ = 0;
};

struct DensityProfile {
  std::string map_id;
  int p = 0;
  int K = 0;
  std::uint64_t N = 0;
  std::uint64_t seed = 0;
  std::vector<CenterProfile> centers;
  std::vector<ShellEstimate> shells;
  /// Residue counts per level k, kept while p^k <= 2^20.
  std::vector<std::map<std::uint64_t, std::uint64_t>> histograms;

  const CenterProfile& center(long long c) const;
};

/// Monte Carlo pushforward of Haar measure on Z_p^n under f (integer
/// coefficients), read at precision p^K. Deterministic in (f, cfg) and
/// independent of the thread count.
DensityProfile estimate_pushforward(const Poly& f, const PadicConfig& cfg, const std::string& map_id = "");

/// Exact density at p^nu of the pushforward of Haar on Z_p^n under the
/// monomial prod x_i^{a_i}.
Rational exact_monomial_density(const std::vector<int>& exponents, int p, int nu);

/// Density at 0, level k, of f = x*y: k(1 - 1/p) + 1.
Rational exact_xy_density_at_zero(int p, int k);
/// Solutions of x*y = z^2 mod p^k, and the level-k density N_k / p^{2k}.
Integer quadric_cone_count(int p, int k);
Rational exact_cone_density_at_zero(int p, int k);

struct Verdict {
  bool bounded = true;
  double sup_estimate = 0;
  double trend = 0;     // weighted least squares slope per level
  double trend_se = 0;
  int first_level = 0;
  int last_level = 0;
  std::string note;
};

/// Trend test on density_k(center) over levels [first, last]; the default
/// window is [max(1, K/2 - 1), K - 2]. Unbounded iff the slope exceeds four
/// standard errors and 0.1 per level. sup_estimate is the largest density
/// among window levels with relative standard error <= 5% (or the first
/// level when none qualifies). Throws Error with fewer than 3 levels.
Verdict boundedness_verdict(const DensityProfile& profile, long long center = 0,
                            std::optional<std::pair<int, int>> window = std::nullopt);

std::string profile_csv(const DensityProfile& profile);

}  // namespace degloci
