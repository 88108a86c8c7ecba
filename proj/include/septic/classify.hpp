#pragma once

// Galois group of an irreducible septic from resolvent factor degrees, with
// a Frobenius cycle-type census as an independent probabilistic check.
//
// Every decision table here is regenerated from the permutation catalog at
// first use; nothing is transcribed by hand.

#include "septic/factor.hpp"
#include "septic/perm.hpp"
#include "septic/resolvent.hpp"

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace septic {

struct Evidence {
  /// "quadratic", "thirty", "onetwenty", "threeset35", "gd", "census"
  std::string kind;
  FactorPattern pattern;
  /// Census entries: how many primes showed this cycle type.
  int count = 0;
};

struct Classification {
  GaloisLabel label{};
  /// "foulkes", "resolvent35", "modp", or "staged/<deciding method>"
  std::string method;
  std::vector<Evidence> evidence;
  bool exact = true;
  /// Probabilistic results: chance that a larger consistent group would
  /// have produced a census this small.
  double pValue = 0.0;
  bool ambiguous = false;
  /// Census results: every minimal group consistent with the census.
  std::vector<GaloisLabel> candidates;
  /// Set when a squarefree-part computation could not be completed.
  bool partial = false;
};

/// No catalog group matches the observed patterns.
class InconsistentPatterns : public std::runtime_error {
public:
  InconsistentPatterns(const std::string& what, std::vector<Evidence> evidence)
      : std::runtime_error(what), evidence_(std::move(evidence)) {}
  const std::vector<Evidence>& evidence() const { return evidence_; }

private:
  std::vector<Evidence> evidence_;
};

/// Orbit lengths each catalog group must produce for a resolvent kind.
const std::map<GaloisLabel, FactorPattern>& expectedPatterns(ResolventKind kind);

/// Quadratic, then 30-ic, then 120-ic, each only while candidates remain.
Classification classifyFoulkes(const IntPoly& f);

/// 35-ic of 3-subset sums with the g_d test on its degree-21 factor.
Classification classify35(const IntPoly& f);

struct CensusResult {
  std::map<FactorPattern, int> counts;
  int primes = 0;
};

/// Cycle types of Frobenius at the first `primeCount` primes not dividing
/// lc(f) * disc(f).
CensusResult frobeniusCensus(const IntPoly& f, int primeCount);

/// Labels whose cycle-type sets contain every observed type.
std::vector<GaloisLabel> consistentGroups(const CensusResult& census);

/// Census-based guess; never exact unless only S7 is consistent.
Classification modpCensus(const IntPoly& f, int primeCount = 100);

struct StagedHooks {
  std::function<Classification(const IntPoly&)> stage2;
  std::function<Classification(const IntPoly&)> stage3;
};

/// 30-prime census that can prove S7 outright, else classify35, else
/// classifyFoulkes when the 35-ic patterns are inconsistent.
Classification classifyStaged(const IntPoly& f, const StagedHooks& hooks = {});

std::string toJson(const Classification& c);

}  // namespace septic
