#pragma once

// Simultaneous multiprecision root finding (Aberth-Ehrlich).

#include "septic/intpoly.hpp"
#include "septic/mpreal.hpp"

#include <vector>

namespace septic {

struct RootSet {
  std::vector<Complex> roots;
  /// Requested accuracy in decimal digits.
  long digits = 0;
  /// MPFR precision the roots are stored at.
  long bits = 0;
  /// log10 of the inclusion radius n*|f(z)/f'(z)| of each root.
  std::vector<double> errorLog10;
};

/// All roots of a squarefree f to `digits` correct digits (relative to
/// max(1, |root|)). Retries at doubled precision up to twice before giving
/// up with std::runtime_error.
RootSet findRoots(const IntPoly& f, long digits);

/// f(z) and f'(z) by Horner's rule.
std::pair<Complex, Complex> evalWithDerivative(const IntPoly& f, const Complex& z);

/// Coefficients of lc * prod (x - roots[i]), ascending.
std::vector<Complex> expandRoots(const std::vector<Complex>& roots, const Complex& lc);

}  // namespace septic
