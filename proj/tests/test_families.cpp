#include "doctest.h"

#include "septic/classify.hpp"
#include "septic/families.hpp"
#include "septic/resultant.hpp"

#include <set>

using namespace septic;

TEST_SUITE("families") {

TEST_CASE("Chebyshev polynomials") {
  CHECK(chebyshevT(0) == IntPoly{1});
  CHECK(chebyshevT(7) == IntPoly{0, -7, 0, 56, 0, -112, 0, 64});
  // T_m(T_n) = T_mn
  CHECK(chebyshevT(2).compose(chebyshevT(3)) == chebyshevT(6));
  for (int n = 0; n < 12; ++n) {
    CHECK(chebyshevT(n).eval(BigInt(1)) == 1);
    CHECK(chebyshevT(n).eval(BigInt(-1)) == (n % 2 ? -1 : 1));
  }
}

TEST_CASE("G7 is a rescaled T7 shifted by u S^3") {
  CHECK(toCoeffString(chebyshevG7({1, 1})) == "64,0,-896,0,3584,0,-3584,-512");
  const IntPoly t7 = chebyshevT(7);
  for (const auto& p : admissibleParams(6)) {
    const BigInt s = p.S();
    // S^(7/2) T7(x / sqrt S): the coefficient of x^k picks up S^((7-k)/2)
    std::vector<BigInt> c(8);
    for (int k = 1; k <= 7; k += 2) {
      BigInt w = 1;
      for (int e = 0; e < (7 - k) / 2; ++e) w *= s;
      c[static_cast<size_t>(k)] = t7[k] * w;
    }
    CHECK(chebyshevG7(p) + IntPoly::constant(p.u * s * s * s) == IntPoly(c));
  }
  CHECK_THROWS_AS(chebyshevG7({2, 4}), DomainError);
}

TEST_CASE("admissible parameters") {
  const auto ps = admissibleParams(10);
  REQUIRE(ps.size() == 10);
  std::set<std::pair<long, long>> seen;
  for (const auto& p : ps) {
    CHECK(p.admissible());
    seen.insert({p.u.get_si(), p.v.get_si()});
  }
  CHECK(seen.size() == 10);
  CHECK_FALSE(ChebyshevParams{1, 0}.admissible());
  CHECK_FALSE(ChebyshevParams{7, 1}.admissible());
}

TEST_CASE("G7 specializations are C7:C3 and so have square discriminants") {
  for (const auto& p : admissibleParams(4)) {
    const IntPoly g = chebyshevG7(p);
    CHECK(classify35(g).label == GaloisLabel::F21);
    CHECK(isPerfectSquare(discriminant(g)));
  }
}

TEST_CASE("cyclic period polynomials") {
  CHECK(primitiveRoot(29) == 2);
  CHECK(primitiveRoot(43) == 3);
  CHECK(toCoeffString(cyclotomicC7(29)) == "1,1,-12,-7,28,14,-9,1");
  for (const auto& row : cyclicTable()) {
    CAPTURE(row.prime);
    const IntPoly f = cyclotomicC7(row.prime);
    CHECK(f == row.poly);
    CHECK(f.height() == row.height);
    const BigInt d = discriminant(f);
    CHECK(isPerfectSquare(d));
    CHECK(d % row.prime == 0);
  }
  CHECK(cyclicTable().size() == 28);
  CHECK_THROWS_AS(cyclotomicC7(31), DomainError);
  CHECK_THROWS_AS(cyclotomicC7(57), DomainError);
}

TEST_CASE("witness corpus covers every group") {
  std::set<GaloisLabel> seen;
  for (const auto& w : knownWitnesses()) {
    CHECK(w.poly.degree() == 7);
    CHECK(isIrreducibleDeg7(w.poly));
    seen.insert(w.label);
  }
  CHECK(seen.size() == 7);
}

}
