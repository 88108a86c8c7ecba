#include "septic/families.hpp"

#include "septic/factor.hpp"
#include "septic/mpreal.hpp"
#include "septic/numroots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace septic {

namespace {

IntPoly descending(std::initializer_list<long> c) {
  std::vector<BigInt> v(c.begin(), c.end());
  return IntPoly::fromDescending(v);
}

bool isPrime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

long powMod(long b, long e, long m) {
  long r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

}  // namespace

IntPoly chebyshevT(int n) {
  if (n < 0) throw DomainError("chebyshevT: negative index");
  IntPoly prev{1};
  if (n == 0) return prev;
  IntPoly cur = IntPoly::x();
  const IntPoly twoX = IntPoly::monomial(2, 1);
  for (int k = 1; k < n; ++k) {
    IntPoly next = twoX * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

bool ChebyshevParams::admissible() const {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
  return g == 1 && !mpz_divisible_ui_p(BigInt(u * v).get_mpz_t(), 7);
}

IntPoly chebyshevG7(const ChebyshevParams& p) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), p.u.get_mpz_t(), p.v.get_mpz_t());
  if (g != 1) throw DomainError("chebyshevG7: u and v must be coprime");
  const BigInt s = p.S();
  const BigInt s2 = s * s;
  const BigInt s3 = s2 * s;
  return IntPoly(std::vector<BigInt>{-p.u * s3, -7 * s3, 0, 56 * s2, 0, -112 * s, 0, 64});
}

std::vector<ChebyshevParams> admissibleParams(int count) {
  std::vector<ChebyshevParams> out;
  for (long bound = 8; static_cast<int>(out.size()) < count; bound *= 2) {
    out.clear();
    for (long u = 1; u * u <= bound; ++u) {
      for (long v = 1; u * u + 7 * v * v <= bound; ++v) {
        ChebyshevParams c{u, v};
        if (c.admissible()) out.push_back(c);
      }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      return a.S() != b.S() ? a.S() < b.S() : a.u < b.u;
    });
  }
  out.resize(static_cast<size_t>(count));
  return out;
}

long primitiveRoot(long p) {
  if (!isPrime(p)) throw DomainError("primitiveRoot: modulus must be prime");
  if (p == 2) return 1;
  std::vector<long> qs;
  long m = p - 1;
  for (long d = 2; d * d <= m; ++d) {
    if (m % d) continue;
    qs.push_back(d);
    while (m % d == 0) m /= d;
  }
  if (m > 1) qs.push_back(m);
  for (long g = 2;; ++g) {
    if (std::all_of(qs.begin(), qs.end(), [&](long q) { return powMod(g, (p - 1) / q, p) != 1; })) return g;
  }
}

IntPoly cyclotomicC7(long p) {
  if (!isPrime(p) || p % 7 != 1) throw DomainError("cyclotomicC7: need a prime p = 1 mod 7");
  const long g = primitiveRoot(p);
  const long m = (p - 1) / 7;
  for (long digits = 40 + static_cast<long>(7 * std::log10(static_cast<double>(p))); digits <= 640; digits *= 2) {
    PrecisionScope scope(PrecisionScope::bitsForDigits(digits));
    const Real twoPiOverP = Real::pi() * Real(2L) / Real(p);
    std::vector<Complex> eta;
    for (long j = 0; j < 7; ++j) {
      Complex s;
      for (long k = 0; k < m; ++k) {
        const long e = powMod(g, 7 * k + j, p);
        s += Complex::polar(Real(1L), twoPiOverP * Real(e));
      }
      eta.push_back(std::move(s));
    }
    const auto c = expandRoots(eta, Complex(Real(1L)));
    std::vector<BigInt> out(c.size());
    bool ok = true;
    for (size_t i = 0; i < c.size() && ok; ++i) {
      out[i] = c[i].re.round();
      ok = abs(c[i].re - Real(out[i])) < Real(0.4) && abs(c[i].im) < Real(0.4);
    }
    if (!ok) continue;
    IntPoly f(std::move(out));
    if (!isIrreducibleDeg7(f)) throw std::runtime_error("cyclotomicC7: rounded period polynomial is reducible");
    return f;
  }
  throw std::runtime_error("cyclotomicC7: periods could not be rounded");
}

const std::vector<CyclicRow>& cyclicTable() {
  static const std::vector<CyclicRow> rows = {
      {29, 28, descending({1, 1, -12, -7, 28, 14, -9, 1})},
      {43, 104, descending({1, 1, -18, -35, 38, 104, 7, -49})},
      {71, 254, descending({1, 1, -30, 3, 254, -246, -245, 137})},
      {113, 312, descending({1, 1, -48, 37, 312, -12, -49, -1})},
      {127, 1713, descending({1, 1, -54, -31, 558, -32, -1713, 1121})},
      {197, 3988, descending({1, 1, -84, -217, 1348, 3988, -1433, -1163})},
      {211, 5249, descending({1, 1, -90, 69, 1306, 124, -5249, -4663})},
      {239, 8933, descending({1, 1, -102, -195, 1850, 978, -8933, 5183})},
      {281, 2863, descending({1, 1, -120, -711, -784, 1956, 2863, -343})},
      {337, 10831, descending({1, 1, -144, 399, 2416, -10808, 10831, -1237})},
      {379, 193369, descending({1, 1, -162, -201, 7822, 12322, -107717, -193369})},
      {421, 49213, descending({1, 1, -180, -103, 6180, 11596, -25209, -49213})},
      {449, 4136, descending({1, 1, -192, 275, 3952, 4136, -81, -863})},
      {463, 56911, descending({1, 1, -198, -907, 4302, 20582, -18973, -56911})},
      {491, 19427, descending({1, 1, -210, 1423, -1410, -8538, 9203, 19427})},
      {547, 71879, descending({1, 1, -234, 335, 13254, -42874, -55309, 71879})},
      {617, 69425, descending({1, 1, -264, -151, 13288, 18556, -69425, 34621})},
      {631, 720896, descending({1, 1, -270, 116, 19848, -31904, -375552, 720896})},
      {659, 115169, descending({1, 1, -282, 1345, 5370, -30042, -14893, 115169})},
      {673, 1722368, descending({1, 1, -288, 316, 23504, -53056, -541952, 1722368})},
      {701, 59049, descending({1, 1, -300, 1631, 5140, -23794, -59049, -18773})},
      {743, 2302639, descending({1, 1, -318, -1031, 26070, 125148, -420841, -2302639})},
      {757, 129744, descending({1, 1, -324, -1483, 20876, 129744, 36999, -54027})},
      {827, 2921075, descending({1, 1, -354, 979, 30030, -111552, -715705, 2921075})},
      {883, 91125, descending({1, 1, -378, -973, 13106, -9624, -64665, 91125})},
      {911, 225929, descending({1, 1, -390, -223, 18058, 30856, -116657, -225929})},
      {953, 8290816, descending({1, 1, -408, 992, 48064, -204560, -1603520, 8290816})},
      {967, 182573, descending({1, 1, -414, -4381, -10434, 32702, 167651, 182573})},
  };
  return rows;
}

const std::vector<Witness>& knownWitnesses() {
  static const std::vector<Witness> corpus = [] {
    std::vector<Witness> out;
    for (const auto& row : cyclicTable()) {
      out.push_back({row.poly, GaloisLabel::C7, "cyclic period polynomial, p = " + std::to_string(row.prime)});
    }
    out.push_back({descending({1, 0, -8, -2, 16, 6, -6, -2}), GaloisLabel::F21, "smallest C7:C3 example, height 16"});
    out.push_back({descending({64, 0, -896, 0, 3584, 0, -3584, -512}), GaloisLabel::F21, "Chebyshev G7 at (u, v) = (1, 1)"});
    out.push_back({descending({1, 0, 0, 0, 0, 0, 0, -2}), GaloisLabel::F42, "x^7 - 2 (Kummer)"});
    out.push_back({descending({1, -2, -1, 1, 1, 1, -1, -1}), GaloisLabel::D7, "height-2 search"});
    out.push_back({descending({1, -1, -1, 1, -1, -1, 2, 1}), GaloisLabel::D7, "height-2 search"});
    out.push_back({descending({1, 0, 0, 0, 0, 0, -7, 3}), GaloisLabel::PSL32, "x^7 - 7x + 3 (Trinks)"});
    out.push_back({descending({1, -2, 0, 2, -2, 2, 0, -2}), GaloisLabel::PSL32, "height-2 search"});
    out.push_back({descending({1, -2, 0, 0, 0, 0, 2, 2}), GaloisLabel::A7, "height-2 search"});
    out.push_back({descending({1, -2, 0, 2, -2, -2, 2, 2}), GaloisLabel::A7, "height-2 search"});
    out.push_back({descending({1, 0, 0, 0, 0, 0, -1, -1}), GaloisLabel::S7, "x^7 - x - 1"});
    return out;
  }();
  return corpus;
}

}  // namespace septic
