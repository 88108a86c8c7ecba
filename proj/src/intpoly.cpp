#include "septic/intpoly.hpp"

#include <algorithm>
#include <sstream>

namespace septic {

namespace {
const BigInt kZero = 0;
}

IntPoly::IntPoly(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::fromDescending(std::span<const BigInt> descending) {
  std::vector<BigInt> c(descending.rbegin(), descending.rend());
  return IntPoly(std::move(c));
}

IntPoly IntPoly::monomial(const BigInt& c, int exponent) {
  if (c == 0) return {};
  std::vector<BigInt> v(static_cast<size_t>(exponent) + 1);
  v.back() = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPoly::operator[](int i) const {
  if (i < 0 || i > degree()) return kZero;
  return coeffs_[static_cast<size_t>(i)];
}

const BigInt& IntPoly::lc() const {
  if (isZero()) return kZero;
  return coeffs_.back();
}

std::vector<BigInt> IntPoly::descending() const { return {coeffs_.rbegin(), coeffs_.rend()}; }

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitivePart() const {
  if (isZero()) return {};
  BigInt c = content();
  if (lc() < 0) c = -c;
  return divExact(*this, c);
}

IntPoly IntPoly::derivative() const {
  if (degree() < 1) return {};
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

BigInt IntPoly::eval(const BigInt& at) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

BigRat IntPoly::eval(const BigRat& at) const {
  BigRat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + BigRat(*it);
  return acc;
}

IntPoly IntPoly::compose(const IntPoly& inner) const {
  IntPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + constant(*it);
  return acc;
}

IntPoly IntPoly::shift(const BigInt& c) const {
  // Taylor shift by repeated synthetic division.
  std::vector<BigInt> a = coeffs_;
  const int n = degree();
  for (int i = 0; i < n; ++i) {
    for (int j = n - 1; j >= i; --j) a[static_cast<size_t>(j)] += c * a[static_cast<size_t>(j) + 1];
  }
  return IntPoly(std::move(a));
}

IntPoly IntPoly::negateVariable() const {
  std::vector<BigInt> a = coeffs_;
  for (size_t i = 1; i < a.size(); i += 2) a[i] = -a[i];
  return IntPoly(std::move(a));
}

BigInt IntPoly::height() const {
  BigInt h = 0;
  for (const auto& c : coeffs_) {
    if (abs(c) > h) h = abs(c);
  }
  return h;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

IntPoly operator-(IntPoly a) {
  for (auto& x : a.coeffs_) x = -x;
  return a;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.isZero() || b.isZero()) return {};
  std::vector<BigInt> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(r));
}

IntPoly pow(const IntPoly& p, unsigned e) {
  IntPoly acc = IntPoly::constant(1);
  IntPoly base = p;
  while (e) {
    if (e & 1u) acc = acc * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return acc;
}

std::optional<IntPoly> tryDivide(const IntPoly& a, const IntPoly& b) {
  if (b.isZero()) throw DomainError("division by the zero polynomial");
  if (a.isZero()) return IntPoly{};
  const int db = b.degree();
  int da = a.degree();
  if (da < db) return std::nullopt;
  std::vector<BigInt> rem = a.coeffs();
  std::vector<BigInt> q(static_cast<size_t>(da - db) + 1);
  const BigInt& lb = b.lc();
  BigInt t;
  for (int k = da - db; k >= 0; --k) {
    BigInt& top = rem[static_cast<size_t>(k + db)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (int j = 0; j <= db; ++j) {
      mpz_submul(rem[static_cast<size_t>(k + j)].get_mpz_t(), t.get_mpz_t(), b[j].get_mpz_t());
    }
    q[static_cast<size_t>(k)] = t;
  }
  for (int j = 0; j < db; ++j) {
    if (rem[static_cast<size_t>(j)] != 0) return std::nullopt;
  }
  return IntPoly(std::move(q));
}

IntPoly divExact(const IntPoly& a, const IntPoly& b) {
  auto q = tryDivide(a, b);
  if (!q) throw DomainError("divExact: divisor does not divide dividend in Z[x]");
  return *q;
}

IntPoly divExact(const IntPoly& a, const BigInt& c) {
  if (c == 0) throw DomainError("divExact: division by zero");
  std::vector<BigInt> r = a.coeffs();
  for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return IntPoly(std::move(r));
}

IntPoly pseudoRemainder(const IntPoly& a, const IntPoly& b) {
  if (b.isZero()) throw DomainError("pseudoRemainder: zero divisor");
  const int db = b.degree();
  int steps = a.degree() - db + 1;
  if (steps <= 0) return a;
  std::vector<BigInt> r = a.coeffs();
  const BigInt& lb = b.lc();
  int dr = a.degree();
  while (dr >= db) {
    BigInt top = r[static_cast<size_t>(dr)];
    for (auto& x : r) x *= lb;
    for (int j = 0; j <= db; ++j) {
      mpz_submul(r[static_cast<size_t>(dr - db + j)].get_mpz_t(), top.get_mpz_t(), b[j].get_mpz_t());
    }
    --steps;
    while (dr >= 0 && r[static_cast<size_t>(dr)] == 0) {
      r.pop_back();
      --dr;
    }
  }
  BigInt scale;
  mpz_pow_ui(scale.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(steps));
  for (auto& x : r) x *= scale;
  return IntPoly(std::move(r));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.isZero()) return b.primitivePart() * b.content();
  if (b.isZero()) return a.primitivePart() * a.content();
  BigInt cg;
  const BigInt ca = a.content();
  const BigInt cb = b.content();
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  IntPoly u = a.primitivePart();
  IntPoly v = b.primitivePart();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.isZero()) {
    IntPoly r = pseudoRemainder(u, v);
    u = std::move(v);
    v = r.primitivePart();
  }
  return u.primitivePart() * cg;
}

IntPoly monicModel(const IntPoly& f) {
  if (f.degree() < 1) throw DomainError("monicModel: degree must be positive");
  const int n = f.degree();
  BigInt a = f.lc();
  IntPoly g = f;
  if (a < 0) {
    g = -g;
    a = -a;
  }
  if (a == 1) return g;
  // b_i = a_i a^(n-1-i)
  std::vector<BigInt> b(static_cast<size_t>(n) + 1);
  BigInt power = 1;
  for (int i = n - 1; i >= 0; --i) {
    b[static_cast<size_t>(i)] = g[i] * power;
    power *= a;
  }
  b[static_cast<size_t>(n)] = 1;
  // undo any prime scaling x -> q x that keeps the model integral
  BigInt rest = a;
  std::vector<BigInt> primes;
  for (unsigned long p : smallPrimes(1000000)) {
    if (rest == 1) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      primes.emplace_back(p);
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    }
  }
  if (rest != 1) primes.push_back(rest);
  for (const BigInt& q : primes) {
    for (;;) {
      bool ok = true;
      BigInt qp = q;
      for (int i = n - 1; i >= 0 && ok; --i, qp *= q) {
        ok = mpz_divisible_p(b[static_cast<size_t>(i)].get_mpz_t(), qp.get_mpz_t()) != 0;
      }
      if (!ok) break;
      qp = q;
      for (int i = n - 1; i >= 0; --i, qp *= q) {
        mpz_divexact(b[static_cast<size_t>(i)].get_mpz_t(), b[static_cast<size_t>(i)].get_mpz_t(), qp.get_mpz_t());
      }
    }
  }
  return IntPoly(std::move(b));
}

std::string toCoeffString(const IntPoly& p, bool ascending) {
  std::vector<BigInt> c = ascending ? p.coeffs() : p.descending();
  if (c.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += c[i].get_str();
  }
  return out;
}

IntPoly parseCoeffs(std::string_view text, bool ascending) {
  std::vector<BigInt> c;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(start, comma - start);
    try {
      c.push_back(parseBigInt(token));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("malformed coefficient '" + std::string(token) + "' in '" +
                                  std::string(text) + "'");
    }
    start = comma + 1;
  }
  if (!ascending) std::reverse(c.begin(), c.end());
  return IntPoly(std::move(c));
}

std::string toPrettyString(const IntPoly& p, char var) {
  if (p.isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const BigInt& c = p[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
    first = false;
  }
  return os.str();
}

}  // namespace septic
