#pragma once

// Complete factorization in Z[x]: content split, squarefree decomposition,
// factorization modulo a small prime, Hensel lifting above the
// Landau-Mignotte bound and exhaustive subset recombination.

#include "septic/intpoly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace septic {

/// Sorted multiset of irreducible-factor degrees.
struct FactorPattern {
  std::vector<int> degrees;

  FactorPattern() = default;
  explicit FactorPattern(std::vector<int> d);

  int total() const;
  std::size_t size() const { return degrees.size(); }
  /// true when `other` is a sub-multiset of this pattern
  bool contains(const FactorPattern& other) const;
  /// "1,7,7,21"
  std::string toString() const;
  static FactorPattern parse(const std::string& text);

  friend bool operator==(const FactorPattern&, const FactorPattern&) = default;
  friend auto operator<=>(const FactorPattern&, const FactorPattern&) = default;
};

struct Factorization {
  /// Signed so that content * prod(factor^multiplicity) == input.
  BigInt content;
  /// Primitive, irreducible over Q, positive leading coefficient; sorted by
  /// degree, then by coefficients.
  std::vector<std::pair<IntPoly, int>> factors;
};

Factorization factorZ(const IntPoly& p);

FactorPattern factorPattern(const IntPoly& p);

/// Degree-7 irreducibility over Q; mod-p shortcuts never change the answer.
bool isIrreducibleDeg7(const IntPoly& f);

/// Irreducibility over Q for any degree >= 1.
bool isIrreducible(const IntPoly& f);

/// Squarefree decomposition of a primitive polynomial: pairs (s_i, i) with
/// f = prod s_i^i, each s_i squarefree, primitive, of positive degree.
std::vector<std::pair<IntPoly, int>> squarefreeDecomposition(const IntPoly& f);

bool isSquarefree(const IntPoly& f);

}  // namespace septic
