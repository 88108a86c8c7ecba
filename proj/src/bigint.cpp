#include "septic/bigint.hpp"

#include <mpfr.h>

#include <cmath>
#include <mutex>

namespace septic {

const std::vector<unsigned long>& smallPrimes(unsigned long bound) {
  static std::mutex mu;
  static std::vector<unsigned long> primes;
  static unsigned long sieved = 0;
  std::lock_guard lock(mu);
  if (sieved < bound) {
    std::vector<bool> composite(bound, false);
    primes.clear();
    for (unsigned long i = 2; i < bound; ++i) {
      if (composite[i]) continue;
      primes.push_back(i);
      for (unsigned long j = i * i; j < bound; j += i) composite[j] = true;
    }
    sieved = bound;
  }
  return primes;
}

bool isPerfectSquare(const BigInt& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

SquarefreeSplit squarefreePart(const BigInt& n) {
  if (n == 0) throw DomainError("squarefreePart: zero has no squarefree part");
  constexpr unsigned long kTrialBound = 1000000;
  SquarefreeSplit out{sgn(n) < 0 ? BigInt(-1) : BigInt(1), BigInt(1), false};
  BigInt m = abs(n);
  for (unsigned long p : smallPrimes(kTrialBound)) {
    if (m == 1) break;
    if (BigInt(p) * p > m) {
      // whatever is left is 1 or a single prime
      break;
    }
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    if (e == 0) continue;
    if (e % 2) out.core *= p;
    for (unsigned i = 0; i < e / 2; ++i) out.root *= p;
  }
  if (m == 1) return out;
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
  if (r * r == m) {
    out.root *= r;
    return out;
  }
  // All prime factors of m are >= the trial bound, so m < bound^3 means at
  // most two of them; a non-square product of two primes is squarefree.
  const BigInt b = kTrialBound;
  if (m < b * b * b || mpz_probab_prime_p(m.get_mpz_t(), 30) != 0) {
    out.core *= m;
    return out;
  }
  out.core *= m;
  out.partial = true;
  return out;
}

BigInt parseBigInt(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.front() == ' ' || s.front() == '+')) s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  BigInt out;
  if (s.empty() || out.set_str(s, 10) != 0) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  return out;
}

std::string ratToString(const BigRat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigRat parseRat(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRat(parseBigInt(text));
  BigInt num = parseBigInt(text.substr(0, slash));
  BigInt den = parseBigInt(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

double ratToDouble(const BigRat& q) {
  mpfr_t t;
  mpfr_init2(t, 53);
  mpfr_set_q(t, q.get_mpq_t(), MPFR_RNDN);
  double d = mpfr_get_d(t, MPFR_RNDN);
  mpfr_clear(t);
  return d;
}

double log10Abs(const BigInt& n) {
  if (n == 0) throw DomainError("log10Abs: zero");
  long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t());
  return std::log10(std::fabs(mant)) + static_cast<double>(exp2) * std::log10(2.0);
}

}  // namespace septic
