#pragma once

// Exact integer and rational scalars. Both are thin aliases over GMP's C++
// classes; everything above this header treats them as value types.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace septic {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Raised when an operation's precondition on its mathematical input fails
/// (zero polynomial, wrong degree, non-subgroup, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// n = core * root^2 with core squarefree and sign(core) = sign(n).
/// `partial` is set when a cofactor above the trial-division bound could not
/// be proven squarefree; `core` then still satisfies n = core * root^2 but
/// may carry a hidden square.
struct SquarefreeSplit {
  BigInt core;
  BigInt root;
  bool partial = false;
};

SquarefreeSplit squarefreePart(const BigInt& n);

bool isPerfectSquare(const BigInt& n);

/// Primes below `bound`, sieved once and cached.
const std::vector<unsigned long>& smallPrimes(unsigned long bound = 1000000);

BigInt parseBigInt(std::string_view text);

/// "p/q" always, including integers ("5/1"), the stable exchange format.
std::string ratToString(const BigRat& q);
BigRat parseRat(std::string_view text);

/// Nearest double, correctly rounded from the exact value even when
/// numerator and denominator overflow a double individually.
double ratToDouble(const BigRat& q);

/// log10 |n| for n != 0, accurate far beyond the double range of n itself.
double log10Abs(const BigInt& n);

}  // namespace septic
