#include "doctest.h"

#include "oracles.hpp"
#include "septic/factor.hpp"

#include <numeric>

using namespace septic;

namespace {

IntPoly multiplyBack(const Factorization& fz) {
  IntPoly acc = IntPoly::constant(fz.content);
  for (const auto& [f, e] : fz.factors) acc = acc * pow(f, static_cast<unsigned>(e));
  return acc;
}

// Eisenstein at 2: monic, every lower coefficient even, constant 2 mod 4.
IntPoly randomEisenstein(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<long> d(-5, 5);
  std::vector<BigInt> c(static_cast<size_t>(degree) + 1);
  for (auto& x : c) x = 2 * d(rng);
  c[0] = 2 * (2 * d(rng) + 1);
  c.back() = 1;
  return IntPoly(std::move(c));
}

bool hasRationalRoot(const IntPoly& f) {
  const BigInt a0 = f[0];
  const BigInt an = f.lc();
  if (a0 == 0) return true;
  auto divisors = [](BigInt n) {
    std::vector<BigInt> out;
    n = abs(n);
    for (BigInt d = 1; d * d <= n; ++d) {
      if (n % d == 0) {
        out.push_back(d);
        out.push_back(n / d);
      }
    }
    return out;
  };
  for (const auto& p : divisors(a0)) {
    for (const auto& q : divisors(an)) {
      for (int s : {1, -1}) {
        if (f.eval(BigRat(s * p, q)) == 0) return true;
      }
    }
  }
  return false;
}

long eulerPhi(long n) {
  long r = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

}  // namespace

TEST_SUITE("factor") {

TEST_CASE("round trip on 1000 random polynomials of degree at most 40") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 1000; ++i) {
    IntPoly f = IntPoly::constant(static_cast<long>(rng() % 7) - 3);
    if (f.isZero()) f = IntPoly{1};
    int budget = 1 + static_cast<int>(rng() % 40);
    while (budget > 0) {
      const int d = 1 + static_cast<int>(rng() % std::min(budget, 12));
      const IntPoly g = oracle::randomPoly(rng, d, 1 + static_cast<long>(rng() % 20));
      const int e = (rng() % 5 == 0 && 2 * d <= budget) ? 2 : 1;
      f = f * pow(g, static_cast<unsigned>(e));
      budget -= d * e;
    }
    const Factorization fz = factorZ(f);
    REQUIRE(multiplyBack(fz) == f);
    for (const auto& [g, e] : fz.factors) {
      CHECK(e >= 1);
      CHECK(g.lc() > 0);
      CHECK(g.content() == 1);
      if (g.degree() >= 2 && g.degree() <= 3) CHECK_FALSE(hasRationalRoot(g));
    }
  }
}

TEST_CASE("planted Eisenstein factors are recovered exactly") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 60; ++i) {
    const int k = 1 + static_cast<int>(rng() % 4);
    IntPoly f{1};
    std::vector<int> degrees;
    for (int j = 0; j < k; ++j) {
      const int d = 2 + static_cast<int>(rng() % 8);
      f = f * randomEisenstein(rng, d);
      degrees.push_back(d);
    }
    std::sort(degrees.begin(), degrees.end());
    CHECK(factorPattern(f) == FactorPattern(degrees));
  }
}

TEST_CASE("cyclotomic factorizations of x^n - 1") {
  for (long n = 1; n <= 40; ++n) {
    const IntPoly f = IntPoly::monomial(1, static_cast<int>(n)) - IntPoly{1};
    std::vector<int> want;
    for (long d = 1; d <= n; ++d) {
      if (n % d == 0) want.push_back(static_cast<int>(eulerPhi(d)));
    }
    std::sort(want.begin(), want.end());
    CHECK(factorPattern(f) == FactorPattern(want));
  }
}

TEST_CASE("polynomials that split modulo every prime") {
  CHECK(isIrreducible(IntPoly{1, 0, 0, 0, 1}));
  CHECK(isIrreducible(IntPoly{1, 0, -10, 0, 1}));
  // product of the conjugate quadratics
  CHECK(factorPattern(IntPoly{1, 0, -10, 0, 1} * IntPoly{-2, 0, 1}) == FactorPattern({2, 4}));
}

TEST_CASE("content, sign and multiplicity bookkeeping") {
  const IntPoly f = IntPoly{-12} * pow(IntPoly{-1, 1}, 3) * IntPoly{0, 1};
  const auto fz = factorZ(f);
  CHECK(fz.content == -12);
  REQUIRE(fz.factors.size() == 2);
  CHECK(std::count(fz.factors.begin(), fz.factors.end(), std::make_pair(IntPoly{0, 1}, 1)) == 1);
  CHECK(std::count(fz.factors.begin(), fz.factors.end(), std::make_pair(IntPoly{-1, 1}, 3)) == 1);
  CHECK_THROWS_AS(factorZ(IntPoly{}), DomainError);
}

TEST_CASE("squarefree decomposition") {
  const IntPoly a{1, 1};
  const IntPoly b{-2, 0, 1};
  const auto sq = squarefreeDecomposition(a * pow(b, 3));
  REQUIRE(sq.size() == 2);
  CHECK(sq[0] == std::make_pair(a, 1));
  CHECK(sq[1] == std::make_pair(b, 3));
  CHECK_FALSE(isSquarefree(a * a));
  CHECK(isSquarefree(a * b));
}

TEST_CASE("degree-7 irreducibility") {
  CHECK(isIrreducibleDeg7(parseCoeffs("1,0,0,0,0,0,-1,-1")));
  CHECK_FALSE(isIrreducibleDeg7(parseCoeffs("1,0,0,0,0,0,0,-1")));
  CHECK_FALSE(isIrreducibleDeg7(parseCoeffs("1,0,0,0,0,0,0,0")));
}

TEST_CASE("factor pattern strings") {
  const auto p = FactorPattern::parse("21,7,7");
  CHECK(p.toString() == "7,7,21");
  CHECK(p.total() == 35);
  CHECK(FactorPattern({1, 7, 14, 14, 21, 21, 42}).contains(FactorPattern({14, 42, 1})));
  CHECK_FALSE(FactorPattern({7, 28}).contains(FactorPattern({7, 7})));
}

}
