#include "septic/factor.hpp"

#include "septic/modp.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace septic {

FactorPattern::FactorPattern(std::vector<int> d) : degrees(std::move(d)) {
  std::sort(degrees.begin(), degrees.end());
}

int FactorPattern::total() const { return std::accumulate(degrees.begin(), degrees.end(), 0); }

bool FactorPattern::contains(const FactorPattern& other) const {
  return std::includes(degrees.begin(), degrees.end(), other.degrees.begin(), other.degrees.end());
}

std::string FactorPattern::toString() const {
  std::string out;
  for (size_t i = 0; i < degrees.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(degrees[i]);
  }
  return out;
}

FactorPattern FactorPattern::parse(const std::string& text) {
  std::vector<int> d;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) d.push_back(std::stoi(tok));
  }
  return FactorPattern(std::move(d));
}

namespace {

using modp::Poly;

bool lessPoly(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

BigInt modNonneg(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigInt modSymmetric(const BigInt& a, const BigInt& m) {
  BigInt r = modNonneg(a, m);
  if (2 * r > m) r -= m;
  return r;
}

IntPoly reduceMod(const IntPoly& a, const BigInt& m) {
  std::vector<BigInt> c = a.coeffs();
  for (auto& x : c) x = modNonneg(x, m);
  return IntPoly(std::move(c));
}

IntPoly reduceSymmetric(const IntPoly& a, const BigInt& m) {
  std::vector<BigInt> c = a.coeffs();
  for (auto& x : c) x = modSymmetric(x, m);
  return IntPoly(std::move(c));
}

IntPoly liftToZ(const Poly& a) {
  std::vector<BigInt> c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = static_cast<unsigned long>(a[i]);
  return IntPoly(std::move(c));
}

/// Division by a monic divisor in Z[x], everything reduced modulo m.
std::pair<IntPoly, IntPoly> divremMonic(const IntPoly& a, const IntPoly& b, const BigInt& m) {
  const int db = b.degree();
  std::vector<BigInt> r = reduceMod(a, m).coeffs();
  if (static_cast<int>(r.size()) - 1 < db) return {IntPoly{}, IntPoly(std::move(r))};
  std::vector<BigInt> q(r.size() - static_cast<size_t>(db), 0);
  for (int k = static_cast<int>(r.size()) - 1 - db; k >= 0; --k) {
    BigInt c = modNonneg(r[static_cast<size_t>(k + db)], m);
    q[static_cast<size_t>(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) {
      mpz_submul(r[static_cast<size_t>(k + j)].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    }
  }
  r.resize(static_cast<size_t>(db));
  return {reduceMod(IntPoly(std::move(q)), m), reduceMod(IntPoly(std::move(r)), m)};
}

struct HenselPair {
  IntPoly g, h, s, t;
};

// One quadratic Hensel step from modulus m to m^2 (h monic).
HenselPair henselStep(const IntPoly& f, const HenselPair& in, const BigInt& m2) {
  const IntPoly e = reduceMod(f - in.g * in.h, m2);
  auto [q, r] = divremMonic(in.s * e, in.h, m2);
  IntPoly g = reduceMod(in.g + in.t * e + q * in.g, m2);
  IntPoly h = reduceMod(in.h + r, m2);
  IntPoly b = reduceMod(in.s * g + in.t * h - IntPoly::constant(1), m2);
  auto [c, d] = divremMonic(in.s * b, h, m2);
  IntPoly s = reduceMod(in.s - d, m2);
  IntPoly t = reduceMod(in.t - in.t * b - c * g, m2);
  return {std::move(g), std::move(h), std::move(s), std::move(t)};
}

Poly productMod(std::span<const Poly> fs, std::uint64_t p) {
  Poly acc{1};
  for (const auto& f : fs) acc = modp::mul(acc, f, p);
  return acc;
}

// Lift monic factors `fs` of f mod p (f = lc * prod fs mod p) to monic
// factors mod `target`, a power of p.
void liftFactors(const IntPoly& f, std::span<const Poly> fs, std::uint64_t p, const BigInt& target,
                 std::vector<IntPoly>& out) {
  if (fs.size() == 1) {
    BigInt inv;
    BigInt lcm = modNonneg(f.lc(), target);
    mpz_invert(inv.get_mpz_t(), lcm.get_mpz_t(), target.get_mpz_t());
    out.push_back(reduceMod(f * inv, target));
    return;
  }
  const size_t half = fs.size() / 2;
  auto left = fs.subspan(0, half);
  auto right = fs.subspan(half);
  const Poly g0 = modp::scale(productMod(left, p), modp::reduce(f.lc(), p), p);
  const Poly h0 = productMod(right, p);
  const auto bez = modp::extendedGcd(g0, h0, p);
  HenselPair cur{liftToZ(g0), liftToZ(h0), liftToZ(bez.s), liftToZ(bez.t)};
  BigInt m = static_cast<unsigned long>(p);
  while (m < target) {
    BigInt m2 = m * m;
    cur = henselStep(f, cur, m2);
    m = m2;
  }
  IntPoly g = reduceMod(cur.g, target);
  IntPoly h = reduceMod(cur.h, target);
  liftFactors(g, left, p, target, out);
  liftFactors(h, right, p, target, out);
}

std::vector<char> subsetSums(const std::vector<int>& degs, int n) {
  std::vector<char> ok(static_cast<size_t>(n) + 1, 0);
  ok[0] = 1;
  for (int d : degs) {
    for (int s = n; s >= d; --s) {
      if (ok[static_cast<size_t>(s - d)]) ok[static_cast<size_t>(s)] = 1;
    }
  }
  return ok;
}

bool nextCombination(std::vector<size_t>& idx, size_t n) {
  const size_t k = idx.size();
  for (size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

BigInt isqrtCeil(const BigInt& a) {
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  if (r * r < a) r += 1;
  return r;
}

constexpr int kMaxAnalysisPrimes = 20;

// Irreducible factors of a primitive squarefree f with positive leading
// coefficient.
std::vector<IntPoly> zassenhaus(const IntPoly& f) {
  const int n = f.degree();
  if (n <= 1) return {f};

  std::vector<char> allowed(static_cast<size_t>(n) + 1, 1);
  std::uint64_t bestPrime = 0;
  std::vector<int> bestDegrees;
  int analysed = 0;
  for (unsigned long pl : smallPrimes()) {
    if (pl < 5) continue;
    const std::uint64_t p = pl;
    if (mpz_divisible_ui_p(f.lc().get_mpz_t(), pl)) continue;
    const Poly fp = modp::reduce(f, p);
    if (!modp::isSquarefree(fp, p)) continue;
    std::vector<int> degs = modp::factorDegrees(fp, p);
    if (degs.size() == 1) return {f};
    const auto sums = subsetSums(degs, n);
    bool anyProper = false;
    for (int d = 1; d < n; ++d) {
      allowed[static_cast<size_t>(d)] = allowed[static_cast<size_t>(d)] && sums[static_cast<size_t>(d)];
      anyProper = anyProper || allowed[static_cast<size_t>(d)];
    }
    if (!anyProper) return {f};
    if (bestPrime == 0 || degs.size() < bestDegrees.size()) {
      bestPrime = p;
      bestDegrees = degs;
    }
    if (++analysed >= std::min(kMaxAnalysisPrimes, 3 + n / 4)) break;
  }

  const std::uint64_t p = bestPrime;
  std::mt19937_64 rng(0x5eed0000ULL + p);
  const std::vector<Poly> local = modp::factorSquarefree(modp::monic(modp::reduce(f, p), p), p, rng);

  // Landau-Mignotte: any factor g satisfies |lc(f)/lc(g) * g|_inf <= |lc(f)| 2^n |f|_2.
  BigInt norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  BigInt bound = abs(f.lc()) * isqrtCeil(norm2);
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n + 1));
  BigInt modulus = static_cast<unsigned long>(p);
  while (modulus <= bound) modulus *= static_cast<unsigned long>(p);

  std::vector<IntPoly> lifted;
  liftFactors(f, local, p, modulus, lifted);

  std::vector<IntPoly> found;
  std::vector<IntPoly> pool = lifted;
  IntPoly rest = f;
  size_t size = 1;
  while (2 * size <= pool.size()) {
    bool hit = false;
    std::vector<size_t> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    do {
      int deg = 0;
      for (size_t i : idx) deg += pool[i].degree();
      if (!allowed[static_cast<size_t>(deg)]) continue;
      const BigInt lcr = rest.lc();
      if (rest[0] != 0) {
        BigInt c0 = lcr;
        for (size_t i : idx) c0 = modNonneg(c0 * pool[i][0], modulus);
        c0 = modSymmetric(c0, modulus);
        if (c0 == 0) continue;
        BigInt target = lcr * rest[0];
        if (!mpz_divisible_p(target.get_mpz_t(), c0.get_mpz_t())) continue;
      }
      IntPoly cand = IntPoly::constant(lcr);
      for (size_t i : idx) cand = reduceMod(cand * pool[i], modulus);
      cand = reduceSymmetric(cand, modulus).primitivePart();
      auto quotient = tryDivide(rest, cand);
      if (!quotient) continue;
      found.push_back(cand);
      rest = *quotient;
      std::vector<IntPoly> keep;
      for (size_t i = 0, j = 0; i < pool.size(); ++i) {
        if (j < idx.size() && idx[j] == i) {
          ++j;
          continue;
        }
        keep.push_back(pool[i]);
      }
      pool = std::move(keep);
      hit = true;
      break;
    } while (nextCombination(idx, pool.size()));
    if (!hit) ++size;
  }
  if (rest.degree() > 0) found.push_back(rest.primitivePart());
  return found;
}

}  // namespace

std::vector<std::pair<IntPoly, int>> squarefreeDecomposition(const IntPoly& f) {
  std::vector<std::pair<IntPoly, int>> out;
  if (f.degree() < 1) return out;
  const IntPoly fd = f.derivative();
  IntPoly b = gcd(f, fd).primitivePart();
  IntPoly c = divExact(f, b);
  IntPoly d = divExact(fd, b) - c.derivative();
  for (int i = 1; c.degree() > 0; ++i) {
    IntPoly a = gcd(c, d).primitivePart();
    if (a.degree() > 0) out.emplace_back(a, i);
    c = divExact(c, a);
    d = divExact(d, a) - c.derivative();
  }
  for (auto& [s, i] : out) s = s.primitivePart();
  return out;
}

bool isSquarefree(const IntPoly& f) {
  if (f.degree() < 2) return !f.isZero();
  for (unsigned long p : smallPrimes()) {
    if (p < 5) continue;
    if (mpz_divisible_ui_p(f.lc().get_mpz_t(), p)) continue;
    if (modp::isSquarefree(modp::reduce(f, p), p)) return true;
    if (p > 200) break;
  }
  return gcd(f, f.derivative()).degree() == 0;
}

Factorization factorZ(const IntPoly& p) {
  if (p.isZero()) throw DomainError("factorZ: zero polynomial");
  Factorization out;
  out.content = p.content();
  if (p.lc() < 0) out.content = -out.content;
  IntPoly f = divExact(p, out.content);
  int xPower = 0;
  while (f.degree() > 0 && f[0] == 0) {
    f = divExact(f, IntPoly::x());
    ++xPower;
  }
  if (xPower) out.factors.emplace_back(IntPoly::x(), xPower);
  if (f.degree() > 0) {
    std::vector<std::pair<IntPoly, int>> parts;
    if (isSquarefree(f)) {
      parts.emplace_back(f, 1);
    } else {
      parts = squarefreeDecomposition(f);
    }
    for (const auto& [s, mult] : parts) {
      for (auto& g : zassenhaus(s)) out.factors.emplace_back(std::move(g), mult);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first == b.first) return a.second < b.second;
    return lessPoly(a.first, b.first);
  });
  return out;
}

FactorPattern factorPattern(const IntPoly& p) {
  std::vector<int> d;
  for (const auto& [g, m] : factorZ(p).factors) {
    for (int i = 0; i < m; ++i) d.push_back(g.degree());
  }
  return FactorPattern(std::move(d));
}

bool isIrreducible(const IntPoly& f) {
  if (f.degree() < 1) return false;
  if (f.content() != 1 && f.degree() >= 1) {
    // a nonunit content is a constant factor, not a polynomial one
  }
  if (f.degree() == 1) return true;
  if (f[0] == 0) return false;
  const IntPoly g = f.primitivePart();
  // a single mod-p factor proves irreducibility outright
  int tried = 0;
  for (unsigned long pl : smallPrimes()) {
    if (pl < 3) continue;
    if (mpz_divisible_ui_p(g.lc().get_mpz_t(), pl)) continue;
    const Poly gp = modp::reduce(g, pl);
    if (!modp::isSquarefree(gp, pl)) continue;
    if (modp::factorDegrees(gp, pl).size() == 1) return true;
    if (++tried >= 4) break;
  }
  const auto fz = factorZ(g);
  return fz.factors.size() == 1 && fz.factors[0].second == 1;
}

bool isIrreducibleDeg7(const IntPoly& f) {
  if (f.degree() != 7) throw DomainError("isIrreducibleDeg7: polynomial must have degree 7");
  return isIrreducible(f);
}

}  // namespace septic
