#include "septic/modp.hpp"

#include <algorithm>
#include <stdexcept>

namespace septic::modp {

std::uint64_t reduce(const BigInt& c, std::uint64_t p) {
  return mpz_fdiv_ui(c.get_mpz_t(), p);
}

Poly reduce(const IntPoly& f, std::uint64_t p) {
  Poly out(f.coeffs().size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = reduce(f.coeffs()[i], p);
  trim(out);
  return out;
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (r != 1) throw std::domain_error("modp::inverse: not invertible");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

Poly add(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

Poly scale(const Poly& a, std::uint64_t c, std::uint64_t p) {
  Poly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c % p;
  trim(r);
  return r;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b, std::uint64_t p) {
  if (b.empty()) throw std::domain_error("modp::divrem: division by zero");
  Poly r = a;
  trim(r);
  const int db = degree(b);
  if (degree(r) < db) return {Poly{}, r};
  Poly q(static_cast<size_t>(degree(r) - db) + 1, 0);
  const std::uint64_t inv = inverse(b.back(), p);
  for (int k = degree(r) - db; k >= 0; --k) {
    const std::uint64_t c = r[static_cast<size_t>(k + db)] * inv % p;
    q[static_cast<size_t>(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) {
      auto& x = r[static_cast<size_t>(k + j)];
      x = (x + p - c * b[static_cast<size_t>(j)] % p) % p;
    }
  }
  trim(r);
  trim(q);
  return {q, r};
}

Poly rem(const Poly& a, const Poly& b, std::uint64_t p) { return divrem(a, b, p).second; }

Poly monic(const Poly& a, std::uint64_t p) {
  if (a.empty()) return a;
  return scale(a, inverse(a.back(), p), p);
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

Bezout extendedGcd(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    auto [q, r] = divrem(r0, r1, p);
    Poly s2 = sub(s0, mul(q, s1, p), p);
    Poly t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {r0, s0, t0};
  const std::uint64_t inv = inverse(r0.back(), p);
  return {scale(r0, inv, p), scale(s0, inv, p), scale(t0, inv, p)};
}

Poly derivative(const Poly& a, std::uint64_t p) {
  if (a.size() <= 1) return {};
  Poly d(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) d[i - 1] = a[i] * (i % p) % p;
  trim(d);
  return d;
}

Poly powMod(const Poly& base, const BigInt& e, const Poly& modulus, std::uint64_t p) {
  Poly result{1};
  result = rem(result, modulus, p);
  Poly b = rem(base, modulus, p);
  const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, p), modulus, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b, p), modulus, p);
  }
  return result;
}

bool isSquarefree(const Poly& f, std::uint64_t p) {
  if (degree(f) < 1) return true;
  Poly d = derivative(f, p);
  if (d.empty()) return false;
  return degree(gcd(f, d, p)) == 0;
}

namespace {

struct DistinctDegreePart {
  int degree;
  Poly product;  // monic product of all irreducible factors of this degree
};

std::vector<DistinctDegreePart> distinctDegree(const Poly& f0, std::uint64_t p) {
  std::vector<DistinctDegreePart> out;
  Poly f = monic(f0, p);
  const Poly x{0, 1};
  Poly h = x;
  const BigInt bp(static_cast<unsigned long>(p));
  for (int d = 1; 2 * d <= degree(f); ++d) {
    h = powMod(h, bp, f, p);
    Poly g = gcd(sub(h, x, p), f, p);
    if (degree(g) > 0) {
      out.push_back({d, g});
      f = divrem(f, g, p).first;
      h = rem(h, f, p);
    }
  }
  if (degree(f) > 0) out.push_back({degree(f), f});
  return out;
}

void equalDegreeSplit(const Poly& g, int d, std::uint64_t p, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (degree(g) == d) {
    out.push_back(g);
    return;
  }
  BigInt e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
  for (;;) {
    Poly a(static_cast<size_t>(degree(g)));
    for (auto& c : a) c = coeff(rng);
    trim(a);
    if (degree(a) < 1) continue;
    Poly b = sub(powMod(a, e, g, p), Poly{1}, p);
    Poly h = gcd(b, g, p);
    if (degree(h) > 0 && degree(h) < degree(g)) {
      equalDegreeSplit(h, d, p, rng, out);
      equalDegreeSplit(divrem(g, h, p).first, d, p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<int> factorDegrees(const Poly& f, std::uint64_t p) {
  std::vector<int> degs;
  for (const auto& part : distinctDegree(f, p)) {
    for (int k = 0; k < degree(part.product) / part.degree; ++k) degs.push_back(part.degree);
  }
  std::sort(degs.begin(), degs.end());
  return degs;
}

std::vector<Poly> factorSquarefree(const Poly& f, std::uint64_t p, std::mt19937_64& rng) {
  if (p == 2) throw std::domain_error("modp::factorSquarefree: p must be odd");
  std::vector<Poly> out;
  for (const auto& part : distinctDegree(f, p)) equalDegreeSplit(part.product, part.degree, p, rng, out);
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

}  // namespace septic::modp
