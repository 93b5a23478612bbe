#include "degloci/birational.hpp"

#include <algorithm>

#include "degloci/errors.hpp"

namespace degloci {

FlipData flip_data(int g, int i) {
  if (g < 2) throw Error("flip_data: genus must be at least 2");
  if (i < 1 || i > g - 1) throw Error("flip_data: index must lie in 1..g-1");
  return FlipData{g, i, 3 * g - 3 * i - 2, 2 * (2 * g - 2 * i - 1)};
}

bool kappa_flip_ok(int g, int i, const Rational& kappa_re) {
  FlipData f = flip_data(g, i);
  return 2 * kappa_re * (2 * g - 2 * i - 1) <= f.m;
}

BlowupExponents blowup_exponents(int g, const Rational& kappa_re) {
  if (g < 2) throw Error("blowup_exponents: genus must be at least 2");
  BlowupExponents b;
  b.bundle_exp = Rational(4 * g - 6) * kappa_re - g + 1;
  b.canonical_m = 2 * g - 3;
  b.threshold = Rational(g - 1, 4 * g - 6);
  b.threshold.canonicalize();
  b.fiber_degree = -2 * (2 * g - 3);
  b.trivial_chain = g == 2;
  return b;
}

bool bir_mod_ok(const std::vector<std::pair<int, int>>& divisor_data, const Rational& kappa_re) {
  return std::all_of(divisor_data.begin(), divisor_data.end(),
                     [&](const auto& mn) { return kappa_re * mn.second <= mn.first; });
}

}  // namespace degloci
