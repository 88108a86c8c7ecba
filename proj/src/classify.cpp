#include "septic/classify.hpp"

#include "septic/modp.hpp"
#include "septic/resultant.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

namespace septic {

namespace {

constexpr int kStageOnePrimes = 30;
constexpr int kMaxTschirnhausenSeeds = 12;

IntPoly prepare(const IntPoly& f) {
  if (f.degree() != 7) throw DomainError("classification needs a polynomial of degree 7");
  if (!isIrreducibleDeg7(f)) throw DomainError("classification needs an irreducible polynomial: " + toCoeffString(f));
  return monicModel(f.primitivePart());
}

FactorPattern quadraticPattern(const BigInt& disc) {
  return isPerfectSquare(disc) ? FactorPattern({1, 1}) : FactorPattern({2});
}

const std::map<GaloisLabel, FactorPattern>& threeSetPatterns() {
  static const auto table = [] {
    std::map<GaloisLabel, FactorPattern> out;
    for (GaloisLabel g : allLabels()) out[g] = orbitPartitionOn3Sets(catalogGroup(g));
    return out;
  }();
  return table;
}

const std::map<GaloisLabel, std::set<FactorPattern>>& cycleTypeTable() {
  static const auto table = [] {
    std::map<GaloisLabel, std::set<FactorPattern>> out;
    for (GaloisLabel g : allLabels()) out[g] = catalogGroup(g).cycleTypes();
    return out;
  }();
  return table;
}

// Fraction of elements of `big` whose cycle type lies in `types`.
double typeShare(GaloisLabel big, const std::set<FactorPattern>& types) {
  const auto& els = catalogGroup(big).elements();
  const auto hits = std::count_if(els.begin(), els.end(), [&](const Perm7& p) { return types.count(p.cycleType()) > 0; });
  return static_cast<double>(hits) / static_cast<double>(els.size());
}

std::string describe(const std::vector<Evidence>& ev) {
  std::string out;
  for (const auto& e : ev) {
    if (!out.empty()) out += "; ";
    out += e.kind + " " + e.pattern.toString();
  }
  return out;
}

void filterBy(std::vector<GaloisLabel>& cands, ResolventKind kind, const FactorPattern& observed) {
  const auto& table = expectedPatterns(kind);
  std::erase_if(cands, [&](GaloisLabel g) { return table.at(g) != observed; });
}

}  // namespace

const std::map<GaloisLabel, FactorPattern>& expectedPatterns(ResolventKind kind) {
  static std::mutex mu;
  static std::map<ResolventKind, std::map<GaloisLabel, FactorPattern>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(kind);
  if (it == cache.end()) {
    std::map<GaloisLabel, FactorPattern> t;
    for (GaloisLabel g : allLabels()) t[g] = orbitLengthsOnCosets(catalogGroup(g), resolventStabilizer(kind));
    it = cache.emplace(kind, std::move(t)).first;
  }
  return it->second;
}

Classification classifyFoulkes(const IntPoly& input) {
  const IntPoly f = prepare(input);
  Classification out;
  out.method = "foulkes";
  std::vector<GaloisLabel> cands(allLabels().begin(), allLabels().end());

  const FactorPattern t = quadraticPattern(discriminant7(f));
  out.evidence.push_back({"quadratic", t});
  filterBy(cands, ResolventKind::Quadratic, t);

  for (ResolventKind kind : {ResolventKind::Thirty, ResolventKind::OneTwenty}) {
    if (cands.size() <= 1) break;
    const NumericResolvent r = resolventNumeric(f, kind);
    const FactorPattern p = factorPattern(r.poly);
    out.evidence.push_back({kindString(kind), p});
    filterBy(cands, kind, p);
  }
  if (cands.size() != 1) {
    throw InconsistentPatterns("inconsistent resolvent patterns for " + toCoeffString(input) + ": " +
                                   describe(out.evidence),
                               out.evidence);
  }
  out.label = cands.front();
  return out;
}

Classification classify35(const IntPoly& input) {
  const IntPoly f = prepare(input);
  Classification out;
  out.method = "resolvent35";

  IntPoly g = f;
  IntPoly r = resolvent35Symbolic(g);
  for (int seed = 1; !isSquarefree(r); ++seed) {
    if (seed > kMaxTschirnhausenSeeds) throw std::runtime_error("classify35: no squarefree 35-ic found");
    try {
      g = tschirnhausen(f, seed);
    } catch (const DomainError&) {
      continue;
    }
    r = resolvent35Symbolic(g);
  }
  const Factorization fz = factorZ(r);
  std::vector<int> degs;
  for (const auto& [h, m] : fz.factors) degs.push_back(h.degree());
  const FactorPattern pattern(degs);
  out.evidence.push_back({"threeset35", pattern});

  std::vector<GaloisLabel> cands;
  for (const auto& [label, p] : threeSetPatterns()) {
    if (p == pattern) cands.push_back(label);
  }
  if (cands.empty()) {
    throw InconsistentPatterns("35-ic pattern " + pattern.toString() + " matches no transitive group for " +
                                   toCoeffString(input),
                               out.evidence);
  }
  const BigInt disc = discriminant7(g);
  if (pattern == FactorPattern({14, 21})) {
    const SquarefreeSplit split = squarefreePart(disc);
    out.partial = split.partial;
    if (split.core == 1) {
      throw InconsistentPatterns("35-ic pattern 14,21 with square discriminant", out.evidence);
    }
    auto it = std::find_if(fz.factors.begin(), fz.factors.end(), [](const auto& e) { return e.first.degree() == 21; });
    const IntPoly gd = auxiliaryGd(it->first, split.core);
    const FactorPattern gp = factorPattern(gd);
    out.evidence.push_back({"gd", gp});
    out.label = gp.size() > 1 ? GaloisLabel::PSL32 : GaloisLabel::F42;
    return out;
  }
  if (cands.size() > 1) {
    // {35}: A7 or S7, told apart by the discriminant
    const FactorPattern t = quadraticPattern(disc);
    out.evidence.push_back({"quadratic", t});
    std::erase_if(cands, [&](GaloisLabel l) { return expectedPatterns(ResolventKind::Quadratic).at(l) != t; });
  }
  if (cands.size() != 1) throw InconsistentPatterns("ambiguous 35-ic evidence: " + describe(out.evidence), out.evidence);
  out.label = cands.front();
  return out;
}

CensusResult frobeniusCensus(const IntPoly& f, int primeCount) {
  const BigInt bad = f.lc() * discriminant(f);
  if (bad == 0) throw DomainError("frobeniusCensus: polynomial has repeated roots");
  CensusResult out;
  for (unsigned long p : smallPrimes()) {
    if (out.primes >= primeCount) break;
    if (mpz_divisible_ui_p(bad.get_mpz_t(), p)) continue;
    out.counts[FactorPattern(modp::factorDegrees(modp::reduce(f, p), p))]++;
    ++out.primes;
  }
  return out;
}

std::vector<GaloisLabel> consistentGroups(const CensusResult& census) {
  std::vector<GaloisLabel> out;
  for (const auto& [label, types] : cycleTypeTable()) {
    const bool ok = std::all_of(census.counts.begin(), census.counts.end(),
                                [&](const auto& e) { return types.count(e.first) > 0; });
    if (ok) out.push_back(label);
  }
  return out;
}

Classification modpCensus(const IntPoly& input, int primeCount) {
  if (primeCount < 1) throw DomainError("modpCensus: prime count must be positive");
  const IntPoly f = prepare(input);
  const CensusResult census = frobeniusCensus(f, primeCount);
  Classification out;
  out.method = "modp";
  for (const auto& [type, n] : census.counts) out.evidence.push_back({"census", type, n});

  const auto consistent = consistentGroups(census);
  const auto& types = cycleTypeTable();
  // minimal elements under inclusion of cycle-type sets
  for (GaloisLabel g : consistent) {
    const bool minimal = std::none_of(consistent.begin(), consistent.end(), [&](GaloisLabel h) {
      return h != g && types.at(h) != types.at(g) &&
             std::includes(types.at(g).begin(), types.at(g).end(), types.at(h).begin(), types.at(h).end());
    });
    if (minimal) out.candidates.push_back(g);
  }
  std::sort(out.candidates.begin(), out.candidates.end(),
            [](GaloisLabel a, GaloisLabel b) { return groupOrder(a) < groupOrder(b); });
  out.label = out.candidates.front();
  out.ambiguous = out.candidates.size() > 1;
  out.exact = consistent.size() == 1;
  double p = 0.0;
  for (GaloisLabel h : consistent) {
    if (h == out.label || types.at(h) == types.at(out.label)) continue;
    p = std::max(p, std::pow(typeShare(h, types.at(out.label)), census.primes));
  }
  out.pValue = out.exact ? 0.0 : p;
  return out;
}

Classification classifyStaged(const IntPoly& input, const StagedHooks& hooks) {
  const IntPoly f = prepare(input);
  std::vector<Evidence> trail;
  const CensusResult census = frobeniusCensus(f, kStageOnePrimes);
  for (const auto& [type, n] : census.counts) trail.push_back({"census", type, n});
  const auto consistent = consistentGroups(census);
  if (consistent.size() == 1 && consistent.front() == GaloisLabel::S7) {
    Classification out;
    out.label = GaloisLabel::S7;
    out.method = "staged/modp";
    out.evidence = std::move(trail);
    return out;
  }
  Classification out;
  try {
    out = hooks.stage2 ? hooks.stage2(f) : classify35(f);
  } catch (const InconsistentPatterns& e) {
    trail.insert(trail.end(), e.evidence().begin(), e.evidence().end());
    out = hooks.stage3 ? hooks.stage3(f) : classifyFoulkes(f);
  }
  trail.insert(trail.end(), out.evidence.begin(), out.evidence.end());
  out.evidence = std::move(trail);
  out.method = "staged/" + out.method;
  return out;
}

std::string toJson(const Classification& c) {
  nlohmann::json j;
  j["label"] = labelString(c.label);
  j["method"] = c.method;
  auto ev = nlohmann::json::array();
  for (const auto& e : c.evidence) {
    nlohmann::json item = {{"kind", e.kind}, {"pattern", e.pattern.toString()}};
    if (e.kind == "census") item["count"] = e.count;
    ev.push_back(std::move(item));
  }
  j["evidence"] = std::move(ev);
  j["confidence"] = c.exact ? "exact" : "probabilistic";
  if (!c.exact) {
    j["p_value"] = c.pValue;
    j["ambiguous"] = c.ambiguous;
    auto cands = nlohmann::json::array();
    for (GaloisLabel g : c.candidates) cands.push_back(labelString(g));
    j["candidates"] = std::move(cands);
  }
  if (c.partial) j["partial"] = true;
  return j.dump();
}

}  // namespace septic
