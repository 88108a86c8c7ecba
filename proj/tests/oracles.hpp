#pragma once

// Test-side helpers: random inputs and independent reference computations.

#include "septic/factor.hpp"
#include "septic/mpreal.hpp"
#include "septic/numroots.hpp"

#include <random>
#include <vector>

namespace oracle {

using septic::BigInt;
using septic::IntPoly;

inline IntPoly randomPoly(std::mt19937_64& rng, int degree, long height, bool monic = false) {
  std::uniform_int_distribution<long> d(-height, height);
  std::vector<BigInt> c(static_cast<size_t>(degree) + 1);
  for (auto& x : c) x = d(rng);
  while (c.back() == 0) c.back() = d(rng);
  if (monic) c.back() = 1;
  return IntPoly(std::move(c));
}

/// Random monic irreducible septic of height <= h with nonzero constant term.
inline IntPoly randomIrreducibleSeptic(std::mt19937_64& rng, long height) {
  for (;;) {
    IntPoly f = randomPoly(rng, 7, height, true);
    if (f[0] != 0 && septic::isIrreducibleDeg7(f)) return f;
  }
}

/// Roots at `digits` precision (caller keeps a PrecisionScope alive).
inline std::vector<septic::Complex> roots(const IntPoly& f, long digits) {
  return septic::findRoots(f, digits).roots;
}

}  // namespace oracle
