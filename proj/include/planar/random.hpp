#pragma once

// Seeded generators for randomized checks. All draws go through one
// std::mt19937_64 so a fixed seed reproduces a run exactly.

#include <random>

#include "planar/algebra.hpp"
#include "planar/scalar.hpp"

namespace planar {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// 1..max_terms terms, coefficients p/q with 0 < |p| <= 5 and 1 <= q <= 4,
/// exponents in [-max_exp, max_exp].
inline ParamScalar random_scalar(Rng& rng, int max_terms = 3, int max_exp = 2) {
  ParamScalar s;
  while (s.is_zero()) {
    int terms = uniform_int(rng, 1, max_terms);
    for (int t = 0; t < terms; ++t) {
      int p = uniform_int(rng, 1, 5) * (uniform_int(rng, 0, 1) ? 1 : -1);
      int q = uniform_int(rng, 1, 4);
      mpq_class c(p, q);
      c.canonicalize();
      s += ParamScalar::monomial(c, uniform_int(rng, -max_exp, max_exp), uniform_int(rng, -max_exp, max_exp));
    }
  }
  return s;
}

/// Random non-zero element with up to max_terms basis diagrams.
inline AlgebraElement random_element(Family family, int n, Rng& rng, int max_terms = 3) {
  const auto& b = basis(family, n);
  AlgebraElement x(family, n);
  while (x.is_zero()) {
    int terms = uniform_int(rng, 1, max_terms);
    for (int t = 0; t < terms; ++t) {
      const auto& d = b[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(b.size()) - 1))];
      x.add(d, random_scalar(rng, 2, 2));
    }
  }
  return x;
}

}  // namespace planar
