#include "doctest.h"

#include "septic/perm.hpp"
#include "septic/resolvent.hpp"

#include <algorithm>
#include <set>

using namespace septic;

namespace {

// Orbits on 3-subsets by direct BFS over the generators.
FactorPattern bruteOrbits3(const PermGroup& g) {
  std::set<std::array<int, 3>> seen;
  std::vector<int> lengths;
  for (int a = 0; a < 7; ++a) {
    for (int b = a + 1; b < 7; ++b) {
      for (int c = b + 1; c < 7; ++c) {
        const std::array<int, 3> start{a, b, c};
        if (seen.count(start)) continue;
        std::vector<std::array<int, 3>> stack{start};
        seen.insert(start);
        int n = 0;
        while (!stack.empty()) {
          auto t = stack.back();
          stack.pop_back();
          ++n;
          for (const auto& s : g.generators()) {
            std::array<int, 3> u{s(t[0]), s(t[1]), s(t[2])};
            std::sort(u.begin(), u.end());
            if (seen.insert(u).second) stack.push_back(u);
          }
        }
        lengths.push_back(n);
      }
    }
  }
  return FactorPattern(lengths);
}

// Orbits of G on S7/H are the double cosets G sigma H; each has length
// |G sigma H| / |H|.
FactorPattern doubleCosetOrbits(const PermGroup& g, const PermGroup& h) {
  std::vector<bool> used(5040, false);
  std::vector<int> lengths;
  for (int r = 0; r < 5040; ++r) {
    if (used[static_cast<size_t>(r)]) continue;
    const Perm7 s = Perm7::unrank(r);
    std::set<int> dc;
    for (const auto& a : g.elements()) {
      for (const auto& b : h.elements()) dc.insert((a * s * b).rank());
    }
    for (int x : dc) used[static_cast<size_t>(x)] = true;
    lengths.push_back(static_cast<int>(dc.size() / h.order()));
  }
  return FactorPattern(lengths);
}

}  // namespace

TEST_SUITE("perm") {

TEST_CASE("permutation basics") {
  const Perm7 c = Perm7::fromCycles("(1234567)");
  CHECK(c.order() == 7);
  CHECK(c.isEven());
  CHECK(c.toCycleString() == "(1234567)");
  const Perm7 t = Perm7::fromCycles("(12)");
  CHECK_FALSE(t.isEven());
  CHECK((c * c.inverse()).isIdentity());
  // (a*b)(i) = a(b(i))
  CHECK((c * t)(0) == c(t(0)));
  CHECK(Perm7::fromCycles("(12)(345)").cycleType() == FactorPattern({2, 3, 1, 1}));
  for (int r = 0; r < 5040; r += 37) CHECK(Perm7::unrank(r).rank() == r);
  CHECK_THROWS(Perm7::fromCycles("(1231)"));
}

TEST_CASE("catalog orders, transitivity and inclusions") {
  for (auto g : allLabels()) {
    const auto& G = catalogGroup(g);
    CHECK(static_cast<int>(G.order()) == groupOrder(g));
    CHECK(G.isTransitive());
    CHECK(parseLabel(labelString(g)) == g);
  }
  auto sub = [](GaloisLabel a, GaloisLabel b) { return catalogGroup(a).isSubgroupOf(catalogGroup(b)); };
  CHECK(sub(GaloisLabel::C7, GaloisLabel::D7));
  CHECK(sub(GaloisLabel::D7, GaloisLabel::F42));
  CHECK(sub(GaloisLabel::C7, GaloisLabel::F21));
  CHECK(sub(GaloisLabel::F21, GaloisLabel::F42));
  CHECK(sub(GaloisLabel::F21, GaloisLabel::PSL32));
  CHECK(sub(GaloisLabel::PSL32, GaloisLabel::A7));
  CHECK(sub(GaloisLabel::A7, GaloisLabel::S7));
  CHECK_FALSE(sub(GaloisLabel::D7, GaloisLabel::F21));
  CHECK_FALSE(sub(GaloisLabel::F42, GaloisLabel::A7));
}

TEST_CASE("even groups are exactly those inside A7") {
  for (auto g : allLabels()) {
    const auto& G = catalogGroup(g);
    const bool even = std::all_of(G.elements().begin(), G.elements().end(), [](const Perm7& p) { return p.isEven(); });
    CHECK(even == G.isSubgroupOf(catalogGroup(GaloisLabel::A7)));
  }
}

TEST_CASE("invariant-form stabilizers") {
  CHECK(tripleSetStabilizer(fanoLines()).order() == 168);
  CHECK(tripleSetStabilizer(fanoLines()).elements() == catalogGroup(GaloisLabel::PSL32).elements());
  CHECK(tripleSetStabilizer(f42Triples()).order() == 42);
  CHECK(tripleSetStabilizer(f42Triples()).elements() == catalogGroup(GaloisLabel::F42).elements());
  CHECK(tripleSetStabilizer({{0, 1, 2}}).order() == 144);
}

TEST_CASE("cosets") {
  const auto& s7 = catalogGroup(GaloisLabel::S7);
  const auto& f42 = catalogGroup(GaloisLabel::F42);
  const auto reps = cosets(f42, s7);
  CHECK(reps.size() == 120);
  std::set<std::set<int>> seen;
  for (const auto& r : reps) {
    std::set<int> coset;
    for (const auto& h : f42.elements()) coset.insert((r * h).rank());
    CHECK(*coset.begin() == r.rank());
    seen.insert(coset);
  }
  CHECK(seen.size() == 120);
  CHECK_THROWS_AS(cosets(catalogGroup(GaloisLabel::D7), catalogGroup(GaloisLabel::F21)), DomainError);
}

TEST_CASE("3-set orbit partitions match BFS and the published table") {
  const std::map<GaloisLabel, std::string> table = {
      {GaloisLabel::C7, "7,7,7,7,7"}, {GaloisLabel::D7, "7,7,7,14"}, {GaloisLabel::F21, "7,7,21"},
      {GaloisLabel::F42, "14,21"},    {GaloisLabel::PSL32, "7,28"},  {GaloisLabel::A7, "35"},
      {GaloisLabel::S7, "35"}};
  for (auto g : allLabels()) {
    const auto got = orbitPartitionOn3Sets(catalogGroup(g));
    CHECK(got == bruteOrbits3(catalogGroup(g)));
    CHECK(got.toString() == table.at(g));
  }
}

TEST_CASE("coset orbit lengths match double-coset counts") {
  for (auto kind : {ResolventKind::Quadratic, ResolventKind::Thirty, ResolventKind::OneTwenty}) {
    const auto& h = resolventStabilizer(kind);
    for (auto g : allLabels()) {
      const auto got = orbitLengthsOnCosets(catalogGroup(g), h);
      CHECK(got.total() == resolventDegree(kind));
      CHECK(got == doubleCosetOrbits(catalogGroup(g), h));
    }
  }
}

TEST_CASE("cycle types") {
  const auto types = catalogGroup(GaloisLabel::F21).cycleTypes();
  CHECK(types == std::set<FactorPattern>{FactorPattern({1, 1, 1, 1, 1, 1, 1}), FactorPattern({7}),
                                         FactorPattern({1, 3, 3})});
  CHECK(catalogGroup(GaloisLabel::S7).cycleTypes().size() == 15);
}

}
