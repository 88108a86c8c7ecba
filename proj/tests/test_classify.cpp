#include "doctest.h"

#include "oracles.hpp"
#include "septic/classify.hpp"
#include "septic/families.hpp"
#include "septic/resultant.hpp"

#include "json.hpp"

#include <algorithm>

using namespace septic;

namespace {

bool censusAllows(const CensusResult& census, GaloisLabel g) {
  const auto types = catalogGroup(g).cycleTypes();
  return std::all_of(census.counts.begin(), census.counts.end(), [&](const auto& kv) { return types.count(kv.first) > 0; });
}

}  // namespace

TEST_SUITE("classify") {

TEST_CASE("expected patterns are regenerated from orbits") {
  const auto& t30 = expectedPatterns(ResolventKind::Thirty);
  CHECK(t30.at(GaloisLabel::C7).toString() == "1,1,7,7,7,7");
  CHECK(t30.at(GaloisLabel::PSL32).toString() == "1,7,8,14");
  CHECK(t30.at(GaloisLabel::A7).toString() == "15,15");
  CHECK(t30.at(GaloisLabel::S7).toString() == "30");
  const auto& t120 = expectedPatterns(ResolventKind::OneTwenty);
  CHECK(t120.at(GaloisLabel::F42).toString() == "1,7,14,14,21,21,42");
  CHECK(t120.at(GaloisLabel::F21).toString() == "1,7,7,7,7,7,21,21,21,21");
  // the three Foulkes resolvents separate all seven groups
  std::set<std::vector<std::string>> keys;
  for (auto g : allLabels()) {
    keys.insert({expectedPatterns(ResolventKind::Quadratic).at(g).toString(), t30.at(g).toString(),
                 t120.at(g).toString()});
  }
  CHECK(keys.size() == 7);
}

TEST_CASE("witness corpus: every method agrees with the known group") {
  for (const auto& w : knownWitnesses()) {
    CAPTURE(w.source);
    const auto a = classify35(w.poly);
    const auto b = classifyFoulkes(w.poly);
    const auto c = classifyStaged(w.poly);
    CHECK(a.label == w.label);
    CHECK(b.label == w.label);
    CHECK(c.label == w.label);
    CHECK(a.exact);
    CHECK(b.exact);
    const auto census = frobeniusCensus(monicModel(w.poly.primitivePart()), 100);
    CHECK(censusAllows(census, w.label));
    const auto m = modpCensus(w.poly, 100);
    CHECK(std::count(m.candidates.begin(), m.candidates.end(), w.label) + (m.label == w.label ? 1 : 0) >= 1);
  }
}

TEST_CASE("discriminant parity across the corpus") {
  for (const auto& w : knownWitnesses()) {
    const bool even = catalogGroup(w.label).isSubgroupOf(catalogGroup(GaloisLabel::A7));
    CHECK(isPerfectSquare(discriminant(w.poly)) == even);
  }
}

TEST_CASE("classification is invariant under Tschirnhausen transforms") {
  for (const auto* text : {"1,0,0,0,0,0,0,-2", "1,0,-8,-2,16,6,-6,-2", "1,0,0,0,0,0,-7,3"}) {
    const IntPoly f = parseCoeffs(text);
    const auto want = classify35(f).label;
    for (int seed = 1; seed <= 3; ++seed) CHECK(classify35(tschirnhausen(f, seed)).label == want);
  }
}

TEST_CASE("census on random septics never contradicts the resolvent answer") {
  std::mt19937_64 rng(81);
  for (int i = 0; i < 15; ++i) {
    const IntPoly f = oracle::randomIrreducibleSeptic(rng, 2);
    const auto c = classify35(f);
    CHECK(censusAllows(frobeniusCensus(f, 100), c.label));
  }
}

TEST_CASE("census results") {
  const auto s7 = modpCensus(parseCoeffs("1,0,0,0,0,0,-1,-1"));
  CHECK(s7.label == GaloisLabel::S7);
  CHECK(s7.exact);
  const auto c7 = modpCensus(parseCoeffs("1,1,-12,-7,28,14,-9,1"));
  CHECK(c7.label == GaloisLabel::C7);
  CHECK_FALSE(c7.exact);
  CHECK(c7.pValue < 1e-10);
  CHECK(frobeniusCensus(parseCoeffs("1,0,0,0,0,0,0,-2"), 50).primes == 50);
}

TEST_CASE("staged classification falls through on inconsistent patterns") {
  StagedHooks hooks;
  hooks.stage2 = [](const IntPoly&) -> Classification {
    throw InconsistentPatterns("forced", {{"threeset35", FactorPattern({5, 30}), 0}});
  };
  const auto c = classifyStaged(parseCoeffs("1,0,0,0,0,0,0,-2"), hooks);
  CHECK(c.label == GaloisLabel::F42);
  CHECK(c.method == "staged/foulkes");
  CHECK(classifyStaged(parseCoeffs("1,0,0,0,0,0,-1,-1")).method == "staged/modp");
  CHECK(classifyStaged(parseCoeffs("1,0,0,0,0,0,0,-2")).method == "staged/resolvent35");
}

TEST_CASE("non-monic input uses the monic model") {
  CHECK(classify35(chebyshevG7({1, 1})).label == GaloisLabel::F21);
  CHECK(classifyFoulkes(parseCoeffs("3,0,0,0,0,0,0,-2")).label == GaloisLabel::F42);
}

TEST_CASE("rejects reducible and non-septic input") {
  CHECK_THROWS_AS(classify35(parseCoeffs("1,0,0,0,0,0,0,-1")), DomainError);
  CHECK_THROWS_AS(classifyFoulkes(parseCoeffs("1,0,0,0,0,-2")), DomainError);
  CHECK_THROWS_AS(classifyStaged(parseCoeffs("1,0,0,0,0,0,0,0")), DomainError);
}

TEST_CASE("JSON output") {
  const auto j = nlohmann::json::parse(toJson(classifyFoulkes(parseCoeffs("1,0,0,0,0,0,0,-2"))));
  CHECK(j["label"] == "C7:C6");
  CHECK(j["method"] == "foulkes");
  CHECK(j["confidence"] == "exact");
  CHECK(j["evidence"].size() == 3);
  const auto p = nlohmann::json::parse(toJson(modpCensus(parseCoeffs("1,1,-12,-7,28,14,-9,1"))));
  CHECK(p["confidence"] == "probabilistic");
  CHECK(p.contains("p_value"));
}

}
