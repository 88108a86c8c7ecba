#include "doctest.h"

#include "oracles.hpp"
#include "septic/modp.hpp"

#include <algorithm>
#include <numeric>

using namespace septic;

namespace {

int rootsModP(const IntPoly& f, std::uint64_t p) {
  int n = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    if (modp::reduce(f.eval(BigInt(static_cast<unsigned long>(x))), p) == 0) ++n;
  }
  return n;
}

}  // namespace

TEST_SUITE("modp") {

TEST_CASE("inverse and extended gcd") {
  for (std::uint64_t a = 1; a < 101; ++a) CHECK(a * modp::inverse(a, 101) % 101 == 1);
  const modp::Poly a{1, 0, 1};  // x^2 + 1
  const modp::Poly b{6, 1};     // x + 6
  const auto bz = modp::extendedGcd(a, b, 13);
  const auto lhs = modp::add(modp::mul(bz.s, a, 13), modp::mul(bz.t, b, 13), 13);
  CHECK(lhs == bz.g);
}

TEST_CASE("distinct-degree factorization counts linear factors") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    const IntPoly f = oracle::randomPoly(rng, 7, 30, true);
    for (std::uint64_t p : {7ULL, 11ULL, 13ULL, 101ULL}) {
      const auto fp = modp::reduce(f, p);
      if (!modp::isSquarefree(fp, p)) continue;
      const auto d = modp::factorDegrees(fp, p);
      CHECK(std::accumulate(d.begin(), d.end(), 0) == 7);
      CHECK(std::count(d.begin(), d.end(), 1) == rootsModP(f, p));
    }
  }
}

TEST_CASE("equal-degree splitting multiplies back") {
  std::mt19937_64 rng(32);
  std::mt19937_64 split(33);
  for (int i = 0; i < 50; ++i) {
    const IntPoly f = oracle::randomPoly(rng, 9, 50, true);
    const std::uint64_t p = 10007;
    const auto fp = modp::reduce(f, p);
    if (!modp::isSquarefree(fp, p)) continue;
    const auto parts = modp::factorSquarefree(fp, p, split);
    modp::Poly prod{1};
    for (const auto& g : parts) prod = modp::mul(prod, g, p);
    CHECK(prod == modp::monic(fp, p));
    auto got = std::vector<int>();
    for (const auto& g : parts) got.push_back(modp::degree(g));
    auto want = modp::factorDegrees(fp, p);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
  }
}

TEST_CASE("powMod agrees with repeated multiplication") {
  const modp::Poly m{3, 1, 0, 0, 1};
  const modp::Poly base{0, 1};
  modp::Poly acc{1};
  for (int e = 0; e < 40; ++e) {
    CHECK(modp::powMod(base, e, m, 17) == modp::rem(acc, m, 17));
    acc = modp::rem(modp::mul(acc, base, 17), m, 17);
  }
}

}
