// One line per acceptance criterion. Exit status is nonzero only when a
// criterion fails that is not listed as unattainable below.

#include "septic/classify.hpp"
#include "septic/dataset.hpp"
#include "septic/families.hpp"
#include "septic/resultant.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

using namespace septic;

namespace {

// pinned limits
constexpr double kCountingSeconds = 1e-3;
constexpr double kEnumerateH1Seconds = 60.0;
constexpr double kEnumerateH2Seconds = 1800.0;
constexpr int kGoldenSepticCount = 50;
constexpr int kResolventSampleCount = 100;
constexpr long kResolventSampleHeight = 3;
constexpr long kResolventDigits = 100;
constexpr int kRandomS7Count = 50;
constexpr int kCensusPrimes = 100;
constexpr int kFamilyCount = 10;
constexpr int kRoundTripCount = 1000;
constexpr int kRoundTripMaxDegree = 40;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << "s";
  return os.str();
}

IntPoly randomMonic(std::mt19937_64& rng, long height) {
  std::uniform_int_distribution<long> d(-height, height);
  std::vector<BigInt> c(8);
  for (auto& x : c) x = d(rng);
  c[7] = 1;
  return IntPoly(std::move(c));
}

IntPoly randomIrreducible(std::mt19937_64& rng, long height) {
  for (;;) {
    IntPoly f = randomMonic(rng, height);
    if (f[0] != 0 && isIrreducibleDeg7(f)) return f;
  }
}

bool censusAllows(const IntPoly& f, GaloisLabel g) {
  const auto census = frobeniusCensus(monicModel(f.primitivePart()), kCensusPrimes);
  const auto types = catalogGroup(g).cycleTypes();
  for (const auto& [t, n] : census.counts) {
    if (!types.count(t)) return false;
  }
  return true;
}

Outcome counting() {
  const auto t0 = std::chrono::steady_clock::now();
  const BigInt a = countPrimitive(7, 1);
  const BigInt b = countPrimitive(7, 2);
  const double s = seconds(t0);
  return {a == 3280 && b == 188752 && s < kCountingSeconds,
          "P(7,1)=" + a.get_str() + " P(7,2)=" + b.get_str() + " in " + fmt(s)};
}

Outcome enumeration() {
  const int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  EnumerateOptions opt;
  opt.mode = EnumerationMode::Monic;
  opt.exactHeight = true;
  opt.height = 1;
  auto t0 = std::chrono::steady_clock::now();
  const auto h1 = countEnumeration(opt, jobs);
  const double s1 = seconds(t0);
  opt.height = 2;
  t0 = std::chrono::steady_clock::now();
  const auto h2 = countEnumeration(opt, jobs);
  const double s2 = seconds(t0);
  return {h1.irreducible == 916 && h2.irreducible == 46552 && s1 < kEnumerateH1Seconds && s2 < kEnumerateH2Seconds,
          "h=1: " + std::to_string(h1.irreducible) + " in " + fmt(s1) + ", h=2: " + std::to_string(h2.irreducible) +
              " in " + fmt(s2) + " (monic, exact height)"};
}

Outcome resolvent35() {
  std::mt19937_64 rng(0xacce55);
  int goldenBad = 0;
  for (int i = 0; i < kGoldenSepticCount; ++i) {
    const IntPoly f = randomMonic(rng, 50);
    const IntPoly r = resolvent35Symbolic(f);
    if (-r[34] != -15 * f[6] || r[33] != 105 * f[6] * f[6] + 10 * f[5]) ++goldenBad;
  }
  int oracleBad = 0;
  int transformed = 0;
  for (int i = 0; i < kResolventSampleCount; ++i) {
    const IntPoly f = randomIrreducible(rng, kResolventSampleHeight);
    const auto num = resolventNumeric(f, ResolventKind::ThreeSet35, kResolventDigits);
    if (num.tschirnhausenSeed) ++transformed;
    if (!(num.poly == resolvent35Symbolic(num.source))) ++oracleBad;
  }
  return {goldenBad == 0 && oracleBad == 0,
          "e1/e2 mismatches " + std::to_string(goldenBad) + "/" + std::to_string(kGoldenSepticCount) +
              ", symbolic vs numeric mismatches " + std::to_string(oracleBad) + "/" +
              std::to_string(kResolventSampleCount) + " (" + std::to_string(transformed) +
              " via Tschirnhausen)"};
}

std::vector<std::pair<IntPoly, GaloisLabel>> classificationCorpus() {
  std::vector<std::pair<IntPoly, GaloisLabel>> items;
  for (const auto& row : cyclicTable()) items.emplace_back(row.poly, GaloisLabel::C7);
  items.emplace_back(parseCoeffs("1,0,-8,-2,16,6,-6,-2"), GaloisLabel::F21);
  items.emplace_back(parseCoeffs("1,0,0,0,0,0,0,-2"), GaloisLabel::F42);
  std::mt19937_64 rng(0x57);
  std::set<std::vector<BigInt>> seen;
  while (static_cast<int>(seen.size()) < kRandomS7Count) {
    std::uniform_int_distribution<long> d(-1, 1);
    std::vector<BigInt> c(8);
    for (auto& x : c) x = d(rng);
    c[7] = 1;
    IntPoly f(c);
    if (f[0] == 0 || f.height() != 1 || !isIrreducibleDeg7(f) || !seen.insert(c).second) continue;
    items.emplace_back(f, GaloisLabel::S7);
  }
  return items;
}

Outcome classification() {
  int agree = 0;
  int censusBad = 0;
  std::string firstBad;
  const auto items = classificationCorpus();
  for (const auto& [f, want] : items) {
    const auto a = classify35(f).label;
    const auto b = classifyFoulkes(f).label;
    if (a == want && b == want) {
      ++agree;
    } else if (firstBad.empty()) {
      firstBad = " first disagreement: " + toCoeffString(f) + " -> " + labelString(a) + " / " + labelString(b);
    }
    if (!censusAllows(f, want)) ++censusBad;
  }
  return {agree == static_cast<int>(items.size()) && censusBad == 0,
          std::to_string(agree) + "/" + std::to_string(items.size()) +
              " agree (28 cyclic, f_min, x^7-2, 50 random height-1), census contradictions " +
              std::to_string(censusBad) + firstBad};
}

Outcome orbitTables() {
  const std::map<GaloisLabel, std::string> table3 = {
      {GaloisLabel::C7, "7,7,7,7,7"}, {GaloisLabel::D7, "7,7,7,14"}, {GaloisLabel::F21, "7,7,21"},
      {GaloisLabel::F42, "14,21"},    {GaloisLabel::PSL32, "7,28"},  {GaloisLabel::A7, "35"},
      {GaloisLabel::S7, "35"}};
  // printed 30-ic column
  const std::map<GaloisLabel, std::string> printed30 = {
      {GaloisLabel::S7, "30"},      {GaloisLabel::A7, "15,15"},       {GaloisLabel::PSL32, "1,7,8,14"},
      {GaloisLabel::F42, "2,14,14"}, {GaloisLabel::F21, "1,7,7,7,7"}, {GaloisLabel::D7, "2,14,14"},
      {GaloisLabel::C7, "1,7,7,7,7"}};
  bool ok = true;
  std::string notes;
  for (auto g : allLabels()) {
    if (orbitPartitionOn3Sets(catalogGroup(g)).toString() != table3.at(g)) ok = false;
    const auto got = orbitLengthsOnCosets(catalogGroup(g), resolventStabilizer(ResolventKind::Thirty));
    const auto want = FactorPattern::parse(printed30.at(g));
    if (want.total() == 30) {
      if (!(got == want)) ok = false;
    } else if (got.contains(want) && got.total() == 30) {
      notes += " " + labelString(g) + ":" + got.toString() + " (printed " + want.toString() + ", sums to " +
               std::to_string(want.total()) + ")";
    } else {
      ok = false;
    }
  }
  return {ok, "3-set partitions exact for all seven groups, F42 {14,21}; 30-ic exact where the printed row sums to 30;" +
                  notes};
}

Outcome families() {
  const bool c7 = toCoeffString(cyclotomicC7(29)) == "1,1,-12,-7,28,14,-9,1";
  const bool g7 = toCoeffString(chebyshevG7({1, 1})) == "64,0,-896,0,3584,0,-3584,-512";
  int f21 = 0;
  std::set<BigInt> cores;
  for (const auto& p : admissibleParams(kFamilyCount)) {
    const IntPoly g = chebyshevG7(p);
    if (classify35(g).label == GaloisLabel::F21 && classifyFoulkes(g).label == GaloisLabel::F21) ++f21;
    cores.insert(squarefreePart(discriminant(monicModel(g))).core);
  }
  std::string coreList;
  for (const auto& c : cores) coreList += (coreList.empty() ? "" : ",") + c.get_str();
  return {c7 && g7 && f21 == kFamilyCount && static_cast<int>(cores.size()) == kFamilyCount,
          std::string("cyclotomicC7(29) ") + (c7 ? "matches" : "differs") + ", G7(1,1) " + (g7 ? "matches" : "differs") +
              ", " + std::to_string(f21) + "/" + std::to_string(kFamilyCount) + " classify C7:C3, " +
              std::to_string(cores.size()) + " distinct discriminant squarefree parts {" + coreList +
              "}: C7:C3 lies in A7, so every discriminant is a square"};
}

Outcome factorization() {
  std::mt19937_64 rng(0xfac7);
  int bad = 0;
  for (int i = 0; i < kRoundTripCount; ++i) {
    const int deg = 1 + static_cast<int>(rng() % kRoundTripMaxDegree);
    IntPoly f{1};
    int left = deg;
    while (left > 0) {
      const int d = 1 + static_cast<int>(rng() % std::min(left, 10));
      std::uniform_int_distribution<long> c(-20, 20);
      std::vector<BigInt> v(static_cast<size_t>(d) + 1);
      for (auto& x : v) x = c(rng);
      if (v.back() == 0) v.back() = 1;
      f = f * IntPoly(std::move(v));
      left -= d;
    }
    f = f * BigInt(static_cast<long>(rng() % 5) + 1);
    const auto fz = factorZ(f);
    IntPoly back = IntPoly::constant(fz.content);
    bool irreducible = true;
    for (const auto& [g, e] : fz.factors) {
      back = back * pow(g, static_cast<unsigned>(e));
      irreducible = irreducible && factorZ(g).factors.size() == 1;
    }
    if (!(back == f) || !irreducible) ++bad;
  }
  const auto r120 = resolventNumeric(parseCoeffs("1,0,0,0,0,0,0,-2"), ResolventKind::OneTwenty);
  const auto pattern = factorPattern(r120.poly);
  const auto printed = FactorPattern::parse("1,7,14,21,21,42");
  const auto orbit = expectedPatterns(ResolventKind::OneTwenty).at(GaloisLabel::F42);
  const bool ok120 = pattern == orbit && pattern.contains(printed);
  return {bad == 0 && ok120, "round-trip failures " + std::to_string(bad) + "/" + std::to_string(kRoundTripCount) +
                                 "; x^7-2 120-ic " + pattern.toString() + " (F42 orbit lengths " +
                                 orbit.toString() + "; printed " + printed.toString() + " sums to " +
                                 std::to_string(printed.total()) + ")"};
}

Outcome discriminantParity() {
  std::vector<std::pair<IntPoly, GaloisLabel>> items;
  for (const auto& w : knownWitnesses()) items.emplace_back(w.poly, w.label);
  for (const auto& p : admissibleParams(kFamilyCount)) items.emplace_back(chebyshevG7(p), GaloisLabel::F21);
  for (const auto& it : classificationCorpus()) items.push_back(it);
  const std::set<GaloisLabel> even = {GaloisLabel::A7, GaloisLabel::PSL32, GaloisLabel::F21, GaloisLabel::C7};
  int bad = 0;
  for (const auto& [f, g] : items) {
    if (isPerfectSquare(discriminant(f)) != (even.count(g) > 0)) ++bad;
  }
  return {bad == 0, std::to_string(items.size() - static_cast<size_t>(bad)) + "/" + std::to_string(items.size()) +
                        " labeled septics satisfy square discriminant <=> group in A7"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    bool unattainable;
  };
  const std::vector<Criterion> criteria = {
      {"counting-lemma", counting, false},
      {"enumeration-irreducible-counts", enumeration, false},
      {"resolvent35-golden-vectors", resolvent35, false},
      {"classification-corpus", classification, false},
      {"orbit-tables", orbitTables, false},
      // Distinct squarefree parts contradict the square discriminants forced by C7:C3 < A7.
      {"family-generators", families, true},
      {"factorization-engine", factorization, false},
      {"discriminant-parity", discriminantParity, false},
  };
  int unexpected = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const char* status = o.pass ? "PASS" : (c.unattainable ? "FAIL (unattainable, documented)" : "FAIL");
    std::cout << status << "  " << c.name << "  " << o.detail << "  [" << fmt(seconds(t0)) << "]" << std::endl;
    if (!o.pass && !c.unattainable) ++unexpected;
  }
  return unexpected ? 1 : 0;
}
