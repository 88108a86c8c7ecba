#pragma once

// Septics with prescribed solvable Galois groups: cyclic septic fields from
// Gaussian periods, and the Chebyshev family with group C7:C3.

#include "septic/perm.hpp"

#include <string>
#include <vector>

namespace septic {

/// T_n with T_0 = 1, T_1 = x, T_{n+1} = 2x T_n - T_{n-1}.
IntPoly chebyshevT(int n);

struct ChebyshevParams {
  BigInt u;
  BigInt v;
  BigInt S() const { return u * u + 7 * v * v; }
  /// gcd(u, v) = 1 and 7 does not divide u*v: the specializations with
  /// group C7:C3.
  bool admissible() const;
};

/// 64x^7 - 112 S x^5 + 56 S^2 x^3 - 7 S^3 x - u S^3. Needs gcd(u, v) = 1;
/// admissibility is the caller's concern (the (1, 0) member is reducible).
IntPoly chebyshevG7(const ChebyshevParams& p);

/// Admissible (u, v) with u, v > 0, ordered by S then u; the first `count`.
std::vector<ChebyshevParams> admissibleParams(int count);

/// Minimal polynomial of the Gaussian period of the index-7 subgroup of
/// (Z/pZ)^*, for a prime p = 1 mod 7. Computed numerically and rounded;
/// the rounding is verified.
IntPoly cyclotomicC7(long p);

/// Smallest primitive root modulo a prime p.
long primitiveRoot(long p);

struct Witness {
  IntPoly poly;
  GaloisLabel label;
  std::string source;
};

/// Curated corpus: the 28 cyclic rows (p = 29 ... 967), the height-16
/// C7:C3 minimum, x^7 - 2, and S7/A7/PSL(3,2)/D7 examples each confirmed by
/// both resolvent methods and the Frobenius census.
const std::vector<Witness>& knownWitnesses();

/// The 28 cyclic rows as published, with their primes and heights.
struct CyclicRow {
  long prime;
  long height;
  IntPoly poly;
};
const std::vector<CyclicRow>& cyclicTable();

}  // namespace septic
