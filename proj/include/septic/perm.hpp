#pragma once

// Permutations of seven points and the transitive subgroups of S7.
//
// Points are 0..6 internally; every printed form (cycle notation, triples)
// uses 1..7. Composition is right-to-left: (a * b)(i) = a(b(i)).

#include "septic/factor.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace septic {

enum class GaloisLabel { C7, D7, F21, F42, PSL32, A7, S7 };

/// Labels in ascending group order.
const std::array<GaloisLabel, 7>& allLabels();
/// "C7", "D7", "C7:C3", "C7:C6", "PSL(3,2)", "A7", "S7"
std::string labelString(GaloisLabel g);
std::optional<GaloisLabel> parseLabel(std::string_view text);
int groupOrder(GaloisLabel g);

class Perm7 {
public:
  using Images = std::array<std::uint8_t, 7>;

  Perm7();
  explicit Perm7(const Images& images);
  /// Cycle notation with 1-based points, e.g. "(1234567)" or "(12)(345)".
  static Perm7 fromCycles(std::string_view cycles);
  /// i -> a*i + b mod 7, a != 0
  static Perm7 affine(int a, int b);

  int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
  const Images& images() const { return img_; }
  Perm7 inverse() const;
  bool isIdentity() const;
  bool isEven() const;
  int order() const;
  /// Cycle lengths including fixed points, e.g. {1,1,5}.
  FactorPattern cycleType() const;
  /// Position in the lexicographic order of S7, 0..5039.
  int rank() const;
  static Perm7 unrank(int r);
  std::string toCycleString() const;

  friend Perm7 operator*(const Perm7& a, const Perm7& b);
  friend bool operator==(const Perm7&, const Perm7&) = default;
  friend auto operator<=>(const Perm7&, const Perm7&) = default;

private:
  Images img_;
};

class PermGroup {
public:
  PermGroup() : PermGroup(std::vector<Perm7>{}) {}
  /// Closure of the generators.
  explicit PermGroup(std::vector<Perm7> generators);
  /// A group given by all of its elements; closure is checked.
  static PermGroup fromElements(std::vector<Perm7> elements);
  static PermGroup symmetric();

  std::size_t order() const { return elements_.size(); }
  /// Sorted lexicographically; identity first.
  const std::vector<Perm7>& elements() const { return elements_; }
  const std::vector<Perm7>& generators() const { return generators_; }
  bool contains(const Perm7& p) const;
  bool isSubgroupOf(const PermGroup& g) const;
  bool isTransitive() const;
  std::set<FactorPattern> cycleTypes() const;

private:
  std::vector<Perm7> generators_;
  std::vector<Perm7> elements_;
  std::array<bool, 5040> member_{};
};

/// The seven transitive subgroups of S7, one fixed representative each.
const std::map<GaloisLabel, PermGroup>& catalog();
const PermGroup& catalogGroup(GaloisLabel g);

/// One representative (the lexicographically smallest element) of every
/// left coset sigma*H inside G, sorted. Acting by left multiplication on
/// these is the action whose orbits give resolvent factor degrees.
std::vector<Perm7> cosets(const PermGroup& h, const PermGroup& g);

/// Orbit lengths of G acting on the 35 three-element subsets of the points.
FactorPattern orbitPartitionOn3Sets(const PermGroup& g);

/// Orbit lengths of G acting by left multiplication on the cosets S7/H.
FactorPattern orbitLengthsOnCosets(const PermGroup& g, const PermGroup& h);

using Triple = std::array<int, 3>;

/// Lines of a Fano plane on the points; their sum of products is the
/// invariant form of the 30-ic resolvent. Stabilizer: catalog PSL(3,2).
const std::vector<Triple>& fanoLines();
/// Fourteen triples whose sum of products has stabilizer F42 exactly;
/// the invariant form of the 120-ic resolvent.
const std::vector<Triple>& f42Triples();
/// Elements of S7 that permute the given set of triples.
PermGroup tripleSetStabilizer(const std::vector<Triple>& triples);

}  // namespace septic
