#pragma once

#include "septic/intpoly.hpp"

namespace septic {

/// Res(p, q): determinant of the Sylvester matrix, computed with the
/// subresultant pseudo-remainder sequence (no fractions, no Sylvester
/// matrix materialized).
BigInt resultant(const IntPoly& p, const IntPoly& q);

/// (-1)^(n(n-1)/2) Res(f, f') / lc(f) for any f of degree n >= 1.
BigInt discriminant(const IntPoly& f);

/// Discriminant of a septic. For a_7 != 1 this is Res(f, f') / a_7 with
/// the (-1)^21 sign, i.e. a_7^12 prod_{i<j} (alpha_i - alpha_j)^2.
BigInt discriminant7(const IntPoly& f);

}  // namespace septic
