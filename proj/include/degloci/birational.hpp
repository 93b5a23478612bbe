#pragma once

#include <utility>
#include <vector>

#include "degloci/rational.hpp"

namespace degloci {

/// Discrepancies of the i-th flip in the genus-g chain.
struct FlipData {
  int g = 0;
  int i = 0;
  int m = 0;  // canonical: 3g - 3i - 2
  int p = 0;  // line bundle: 2(2g - 2i - 1)
};

/// Throws Error unless g >= 2 and 1 <= i <= g - 1.
FlipData flip_data(int g, int i);

/// 2 * kappa * (2g - 2i - 1) <= 3g - 3i - 2, exactly.
bool kappa_flip_ok(int g, int i, const Rational& kappa_re);

struct BlowupExponents {
  Rational bundle_exp;  // (4g - 6) kappa - g + 1
  int canonical_m = 0;  // 2g - 3
  Rational threshold;   // (g - 1) / (4g - 6)
  int fiber_degree = 0; // -2(2g - 3), degree on an exceptional fiber
  bool trivial_chain = false;  // g == 2: the first blow-up is the whole chain
};

BlowupExponents blowup_exponents(int g, const Rational& kappa_re);

/// kappa * n_i <= m_i for every pair (m_i, n_i).
bool bir_mod_ok(const std::vector<std::pair<int, int>>& divisor_data, const Rational& kappa_re);

}  // namespace degloci
