#include "doctest.h"

#include "oracles.hpp"
#include "septic/forms.hpp"

using namespace septic;

namespace {

BinaryForm randomForm(std::mt19937_64& rng, int degree, long height) {
  std::uniform_int_distribution<long> d(-height, height);
  std::vector<BigRat> c(static_cast<size_t>(degree) + 1);
  for (auto& x : c) x = d(rng);
  return BinaryForm(std::move(c));
}

// Product of elementary unipotent matrices: determinant 1.
std::array<BigInt, 4> randomSL2(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-3, 3);
  std::array<BigInt, 4> m{1, 0, 0, 1};
  for (int i = 0; i < 3; ++i) {
    const BigInt k = d(rng);
    // m * [[1,k],[0,1]] then m * [[1,0],[k,1]]
    m = {m[0], m[0] * k + m[1], m[2], m[2] * k + m[3]};
    const BigInt j = d(rng);
    m = {m[0] + m[1] * j, m[1], m[2] + m[3] * j, m[3]};
  }
  return m;
}

}  // namespace

TEST_SUITE("forms") {

TEST_CASE("homogenization and derivatives") {
  const auto f = BinaryForm::fromPoly(IntPoly{1, 2, 3});  // 3x^2 + 2xy + y^2
  CHECK(f.degree() == 2);
  CHECK(f[2] == 3);
  CHECK(f.dx() == BinaryForm(std::vector<BigRat>{2, 6}));
  CHECK(f.dy() == BinaryForm(std::vector<BigRat>{2, 2}));
}

TEST_CASE("transvectants are bilinear and (anti)symmetric") {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 20; ++i) {
    const auto f = randomForm(rng, 5, 9);
    const auto g = randomForm(rng, 5, 9);
    const auto h = randomForm(rng, 4, 9);
    for (int r = 1; r <= 4; ++r) {
      CHECK(transvectant(f + g, h, r) == transvectant(f, h, r) + transvectant(g, h, r));
      CHECK(transvectant(BigRat(3, 2) * f, h, r) == BigRat(3, 2) * transvectant(f, h, r));
      const BigRat sign = r % 2 ? -1 : 1;
      CHECK(transvectant(h, f, r) == sign * transvectant(f, h, r));
    }
    CHECK(transvectant(f, f, 3).isZero());
  }
}

TEST_CASE("first transvectant is the normalized Jacobian") {
  std::mt19937_64 rng(52);
  const auto f = randomForm(rng, 4, 9);
  const auto g = randomForm(rng, 3, 9);
  const auto jac = f.dx() * g.dy() + BigRat(-1) * (f.dy() * g.dx());
  CHECK(transvectant(f, g, 1) == BigRat(1, 12) * jac);
  CHECK_THROWS_AS(transvectant(f, g, 4), DomainError);
}

TEST_CASE("xi invariants are SL2 invariant") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 20; ++i) {
    const auto f = randomForm(rng, 7, 4);
    const auto m = randomSL2(rng);
    CHECK(m[0] * m[3] - m[1] * m[2] == 1);
    CHECK(invariantsXi(f.substitute(m[0], m[1], m[2], m[3])) == invariantsXi(f));
  }
}

TEST_CASE("xi invariants scale with their degrees and weights") {
  std::mt19937_64 rng(54);
  const auto f = randomForm(rng, 7, 5);
  const auto base = invariantsXi(f);
  const auto scaled = invariantsXi(BigRat(2) * f);
  // x -> 2x has determinant 2; weight = 7 * degree / 2
  const auto stretched = invariantsXi(f.substitute(2, 0, 0, 1));
  for (size_t i = 0; i < 5; ++i) {
    BigRat s = 1;
    for (int k = 0; k < kXiDegrees[i]; ++k) s *= 2;
    CHECK(scaled[i] == s * base[i]);
    BigRat w = 1;
    for (int k = 0; k < 7 * kXiDegrees[i] / 2; ++k) w *= 2;
    CHECK(stretched[i] == w * base[i]);
  }
}

TEST_CASE("xi of a form with a root of multiplicity 7 vanishes") {
  const auto xi = invariantsXi(parseCoeffs("1,0,0,0,0,0,0,0"));
  for (const auto& v : xi) CHECK(v == 0);
  const auto shifted = invariantsXi(pow(IntPoly{-3, 2}, 7));
  for (const auto& v : shifted) CHECK(v == 0);
}

TEST_CASE("signature counts real roots") {
  CHECK(signature(parseCoeffs("1,1,-12,-7,28,14,-9,1")) == 7);
  CHECK(signature(parseCoeffs("1,0,0,0,0,0,0,-2")) == 1);
  CHECK(signature(parseCoeffs("1,0,0,0,0,0,-1,-1")) == 1);
  CHECK_THROWS_AS(signature(IntPoly{1, 2, 1}), DomainError);
  std::mt19937_64 rng(55);
  int tested = 0;
  while (tested < 40) {
    const IntPoly f = oracle::randomPoly(rng, 7, 20);
    if (!isSquarefree(f)) continue;
    const auto rs = findRoots(f, 40);
    PrecisionScope scope(rs.bits);
    int real = 0;
    for (const auto& r : rs.roots) real += abs(r.im) < Real(1e-25) ? 1 : 0;
    CHECK(signature(f) == real);
    ++tested;
  }
}

}
