#pragma once

#include <random>
#include <string>
#include <vector>

#include "degloci/parse.hpp"
#include "degloci/poly.hpp"

namespace testing {

using namespace degloci;

inline RingPtr xyz() { return make_ring({"x", "y", "z"}); }

inline Poly P(const std::string& s, const RingPtr& R) { return parse_poly(s, R); }

inline std::vector<Poly> Ps(const std::vector<std::string>& ss, const RingPtr& R) {
  std::vector<Poly> out;
  for (const auto& s : ss) out.push_back(parse_poly(s, R));
  return out;
}

// Sparse random polynomial with small integer coefficients.
inline Poly random_poly(std::mt19937_64& gen, const RingPtr& R, int terms, int max_deg) {
  std::uniform_int_distribution<int> coef(-4, 4), deg(0, max_deg);
  Poly f(R);
  for (int k = 0; k < terms; ++k) {
    Monomial m(R->width());
    for (std::size_t i = 0; i < R->nvars(); ++i) m[i] = deg(gen);
    f += Poly::term(R, m, coef(gen));
  }
  return f;
}

inline std::vector<Rational> random_point(std::mt19937_64& gen, std::size_t n) {
  std::uniform_int_distribution<int> num(-7, 7), den(1, 5);
  std::vector<Rational> pt;
  for (std::size_t i = 0; i < n; ++i) {
    Rational q(num(gen), den(gen));
    q.canonicalize();
    pt.push_back(q);
  }
  return pt;
}

}  // namespace testing
