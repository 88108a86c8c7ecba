#include "septic/resultant.hpp"

namespace septic {

namespace {

BigInt powUi(const BigInt& b, long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

BigInt exactQuotient(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace

BigInt resultant(const IntPoly& p, const IntPoly& q) {
  if (p.isZero() || q.isZero()) throw DomainError("resultant: zero polynomial");
  IntPoly a = p;
  IntPoly b = q;
  BigInt ca = a.content();
  BigInt cb = b.content();
  if (a.lc() < 0) ca = -ca;
  if (b.lc() < 0) cb = -cb;
  a = divExact(a, ca);
  b = divExact(b, cb);
  BigInt t = powUi(ca, b.degree()) * powUi(cb, a.degree());
  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
  }
  if (b.degree() == 0) return s * t * powUi(b.lc(), a.degree());
  BigInt g = 1;
  BigInt h = 1;
  for (;;) {
    const int delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
    IntPoly r = pseudoRemainder(a, b);
    a = std::move(b);
    if (r.isZero()) return 0;
    b = divExact(r, g * powUi(h, delta));
    g = a.lc();
    if (delta == 0) {
      // h unchanged
    } else {
      h = exactQuotient(powUi(g, delta), powUi(h, delta - 1));
    }
    if (b.degree() == 0) break;
  }
  const int da = a.degree();
  BigInt hh = exactQuotient(powUi(b.lc(), da), powUi(h, da - 1));
  return s * t * hh;
}

BigInt discriminant(const IntPoly& f) {
  const int n = f.degree();
  if (n < 1) throw DomainError("discriminant: degree must be positive");
  if (n == 1) return 1;
  BigInt r = resultant(f, f.derivative());
  r = exactQuotient(r, f.lc());
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

BigInt discriminant7(const IntPoly& f) {
  if (f.degree() != 7) throw DomainError("discriminant7: polynomial must have degree 7");
  return discriminant(f);
}

}  // namespace septic
