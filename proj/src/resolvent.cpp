#include "septic/resolvent.hpp"

#include "septic/factor.hpp"
#include "septic/numroots.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <random>
#include <sstream>

namespace septic {

namespace {

constexpr int kMaxTschirnhausenSeeds = 12;
constexpr double kRoundingSlack = 0.4;

BigInt multinomial(int m, int a, int b) {
  BigInt x;
  BigInt y;
  mpz_bin_uiui(x.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(a));
  mpz_bin_uiui(y.get_mpz_t(), static_cast<unsigned long>(m - a), static_cast<unsigned long>(b));
  return x * y;
}

const std::vector<Triple>& firstTriple() {
  static const std::vector<Triple> t = {{0, 1, 2}};
  return t;
}

const std::vector<Perm7>& cosetReps(ResolventKind kind) {
  static std::mutex mu;
  static std::map<ResolventKind, std::vector<Perm7>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(kind);
  if (it == cache.end()) {
    it = cache.emplace(kind, cosets(resolventStabilizer(kind), catalogGroup(GaloisLabel::S7))).first;
  }
  return it->second;
}

Complex theta(ResolventKind kind, const std::vector<Complex>& a, const Perm7& s) {
  auto at = [&](int i) -> const Complex& { return a[static_cast<size_t>(s(i))]; };
  switch (kind) {
    case ResolventKind::Quadratic: {
      Complex v(Real(1L));
      for (int i = 0; i < 7; ++i) {
        for (int j = i + 1; j < 7; ++j) v *= at(i) - at(j);
      }
      return v;
    }
    case ResolventKind::ThreeSet35:
      return at(0) + at(1) + at(2);
    case ResolventKind::Thirty:
    case ResolventKind::OneTwenty: {
      const auto& triples = kind == ResolventKind::Thirty ? fanoLines() : f42Triples();
      Complex v;
      for (const auto& t : triples) v += at(t[0]) * at(t[1]) * at(t[2]);
      return v;
    }
  }
  return {};
}

struct Attempt {
  std::optional<IntPoly> poly;
  bool collision = false;
};

Attempt attempt(const IntPoly& g, ResolventKind kind, long digits) {
  const auto& reps = cosetReps(kind);
  const auto n = static_cast<double>(reps.size());

  // size the working precision from a cheap look at |theta|
  double thetaLog = 0.0;
  {
    const RootSet coarse = findRoots(g, 30);
    PrecisionScope scope(coarse.bits);
    for (const auto& s : reps) thetaLog = std::max(thetaLog, theta(kind, coarse.roots, s).abs().log10Abs());
  }
  const double coeffLog = n * std::log10(1.0 + std::pow(10.0, std::min(thetaLog, 300.0)));
  const long working = digits + static_cast<long>(std::ceil(coeffLog)) + 10;

  const RootSet rs = findRoots(g, working);
  PrecisionScope scope(rs.bits);
  std::vector<Complex> th;
  th.reserve(reps.size());
  for (const auto& s : reps) th.push_back(theta(kind, rs.roots, s));

  const Real sep = pow10(-digits / 2);
  for (size_t i = 0; i < th.size(); ++i) {
    for (size_t j = i + 1; j < th.size(); ++j) {
      if ((th[i] - th[j]).abs() < sep) return {std::nullopt, true};
    }
  }

  const auto c = expandRoots(th, Complex(Real(1L)));
  const Real slack(kRoundingSlack);
  std::vector<BigInt> out(c.size());
  for (size_t i = 0; i < c.size(); ++i) {
    out[i] = c[i].re.round();
    if (abs(c[i].re - Real(out[i])) > slack || abs(c[i].im) > slack) return {std::nullopt, false};
  }
  return {IntPoly(std::move(out)), false};
}

}  // namespace

std::string kindString(ResolventKind k) {
  switch (k) {
    case ResolventKind::Quadratic: return "quadratic";
    case ResolventKind::Thirty: return "thirty";
    case ResolventKind::OneTwenty: return "onetwenty";
    case ResolventKind::ThreeSet35: return "threeset35";
  }
  return "unknown";
}

std::optional<ResolventKind> parseKind(std::string_view text) {
  for (auto k : {ResolventKind::Quadratic, ResolventKind::Thirty, ResolventKind::OneTwenty,
                 ResolventKind::ThreeSet35}) {
    if (kindString(k) == text) return k;
  }
  return std::nullopt;
}

int resolventDegree(ResolventKind k) {
  switch (k) {
    case ResolventKind::Quadratic: return 2;
    case ResolventKind::Thirty: return 30;
    case ResolventKind::OneTwenty: return 120;
    case ResolventKind::ThreeSet35: return 35;
  }
  return 0;
}

const PermGroup& resolventStabilizer(ResolventKind k) {
  static const PermGroup s3s4 = tripleSetStabilizer(firstTriple());
  switch (k) {
    case ResolventKind::Quadratic: return catalogGroup(GaloisLabel::A7);
    case ResolventKind::Thirty: return catalogGroup(GaloisLabel::PSL32);
    case ResolventKind::OneTwenty: return catalogGroup(GaloisLabel::F42);
    case ResolventKind::ThreeSet35: return s3s4;
  }
  throw DomainError("unknown resolvent kind");
}

std::vector<BigInt> powerSumsFromPoly(const IntPoly& f, int k) {
  if (!f.isMonic()) throw DomainError("powerSumsFromPoly: polynomial must be monic");
  const int n = f.degree();
  // a(j) = coefficient of x^(n-j)
  auto a = [&](int j) -> BigInt { return j <= n ? f[n - j] : BigInt(0); };
  std::vector<BigInt> p(static_cast<size_t>(k) + 1);
  p[0] = n;
  for (int m = 1; m <= k; ++m) {
    BigInt s = -a(m) * m;
    for (int i = 1; i < m && i <= n; ++i) s -= a(i) * p[static_cast<size_t>(m - i)];
    p[static_cast<size_t>(m)] = s;
  }
  return p;
}

IntPoly polyFromPowerSums(const std::vector<BigRat>& p, int n) {
  if (static_cast<int>(p.size()) <= n) throw DomainError("polyFromPowerSums: too few power sums");
  std::vector<BigRat> e(static_cast<size_t>(n) + 1);
  e[0] = 1;
  for (int k = 1; k <= n; ++k) {
    BigRat s = 0;
    for (int i = 1; i <= k; ++i) {
      const BigRat term = e[static_cast<size_t>(k - i)] * p[static_cast<size_t>(i)];
      if (i % 2) {
        s += term;
      } else {
        s -= term;
      }
    }
    e[static_cast<size_t>(k)] = s / k;
  }
  std::vector<BigInt> c(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    const BigRat& v = e[static_cast<size_t>(k)];
    if (v.get_den() != 1) {
      throw DomainError("polyFromPowerSums: e_" + std::to_string(k) + " = " + ratToString(v) + " is not integral");
    }
    c[static_cast<size_t>(n - k)] = k % 2 ? BigInt(-v.get_num()) : BigInt(v.get_num());
  }
  return IntPoly(std::move(c));
}

IntPoly resolvent35Symbolic(const IntPoly& f) {
  if (f.degree() != 7) throw DomainError("resolvent35Symbolic: degree must be 7");
  if (!f.isMonic()) throw DomainError("resolvent35Symbolic: polynomial must be monic");
  constexpr int kDeg = 35;
  const auto P = powerSumsFromPoly(f, kDeg);
  auto at = [&](int i) -> const BigInt& { return P[static_cast<size_t>(i)]; };
  std::vector<BigRat> p(kDeg + 1);
  p[0] = kDeg;
  for (int m = 1; m <= kDeg; ++m) {
    // sum over ordered triples of distinct indices of a_i^a a_j^b a_k^c
    BigInt total = 0;
    for (int a = 0; a <= m; ++a) {
      for (int b = 0; a + b <= m; ++b) {
        const int c = m - a - b;
        const BigInt distinct = at(a) * at(b) * at(c) - at(a + b) * at(c) - at(a + c) * at(b) -
                                at(b + c) * at(a) + 2 * at(m);
        total += multinomial(m, a, b) * distinct;
      }
    }
    if (!mpz_divisible_ui_p(total.get_mpz_t(), 6)) throw DomainError("resolvent35Symbolic: non-integral power sum");
    p[static_cast<size_t>(m)] = BigRat(BigInt(total / 6));
  }
  return polyFromPowerSums(p, kDeg);
}

IntPoly tschirnhausen(const IntPoly& f, const IntPoly& t) {
  const int n = f.degree();
  if (n < 1) throw DomainError("tschirnhausen: constant polynomial");
  // reduce x^j t(x) modulo f over Q; columns of the multiplication matrix
  std::vector<std::vector<BigRat>> m(static_cast<size_t>(n), std::vector<BigRat>(static_cast<size_t>(n)));
  const BigRat lc(f.lc());
  for (int j = 0; j < n; ++j) {
    std::vector<BigRat> v(static_cast<size_t>(std::max(n, t.degree() + j + 1)));
    for (int i = 0; i <= t.degree(); ++i) v[static_cast<size_t>(i + j)] = t[i];
    for (int d = static_cast<int>(v.size()) - 1; d >= n; --d) {
      const BigRat q = v[static_cast<size_t>(d)] / lc;
      if (q == 0) continue;
      for (int i = 0; i <= n; ++i) v[static_cast<size_t>(d - n + i)] -= q * f[i];
    }
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = v[static_cast<size_t>(i)];
  }
  // Faddeev-LeVerrier: c_n = 1, M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k
  const auto N = static_cast<size_t>(n);
  std::vector<BigRat> c(N + 1);
  c[N] = 1;
  std::vector<std::vector<BigRat>> mk(N, std::vector<BigRat>(N));
  std::vector<std::vector<BigRat>> am(N, std::vector<BigRat>(N));
  for (size_t k = 1; k <= N; ++k) {
    for (size_t i = 0; i < N; ++i) mk[i][i] += c[N - k + 1];
    BigRat tr = 0;
    for (size_t i = 0; i < N; ++i) {
      for (size_t j = 0; j < N; ++j) {
        BigRat s = 0;
        for (size_t l = 0; l < N; ++l) s += m[i][l] * mk[l][j];
        am[i][j] = s;
      }
      tr += am[i][i];
    }
    c[N - k] = -tr / static_cast<long>(k);
    mk = am;
  }
  BigInt den = 1;
  for (const auto& x : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<BigInt> out(N + 1);
  for (size_t i = 0; i <= N; ++i) out[i] = c[i].get_num() * (den / c[i].get_den());
  return IntPoly(std::move(out)).primitivePart();
}

IntPoly tschirnhausenPolynomial(int seed) {
  if (seed == 0) return IntPoly::x();
  std::mt19937_64 rng(static_cast<std::uint64_t>(seed) * 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<long> small(-2, 2);
  std::uniform_int_distribution<long> nonzero(1, 3);
  const long c0 = small(rng);
  long c2 = nonzero(rng);
  if (rng() & 1U) c2 = -c2;
  const long c3 = small(rng);
  return IntPoly{c0, 1, c2, c3};
}

IntPoly tschirnhausen(const IntPoly& f, int seed) {
  IntPoly g = tschirnhausen(f, tschirnhausenPolynomial(seed));
  if (!isSquarefree(g)) throw DomainError("tschirnhausen: seed " + std::to_string(seed) + " does not give a primitive element");
  return g;
}

NumericResolvent resolventNumeric(const IntPoly& f, ResolventKind kind, long digits) {
  if (f.degree() != 7) throw DomainError("resolventNumeric: degree must be 7");
  if (!f.isMonic()) throw DomainError("resolventNumeric: polynomial must be monic");
  if (!isSquarefree(f)) throw DomainError("resolventNumeric: polynomial has repeated roots");
  std::vector<long> ladder;
  for (long d : {100L, 200L, 400L}) {
    if (d >= digits) ladder.push_back(d);
  }
  if (ladder.empty() || ladder.front() != digits) ladder.insert(ladder.begin(), digits);
  for (int seed = 0; seed <= kMaxTschirnhausenSeeds; ++seed) {
    IntPoly g = f;
    if (seed) {
      try {
        g = tschirnhausen(f, seed);
      } catch (const DomainError&) {
        continue;
      }
    }
    bool collided = false;
    for (long d : ladder) {
      Attempt a = attempt(g, kind, d);
      if (a.collision) {
        collided = true;
        break;
      }
      if (a.poly) return {kind, std::move(*a.poly), g, seed, d};
    }
    if (!collided) break;
  }
  throw PrecisionExhausted("resolventNumeric: " + kindString(kind) + " resolvent of " + toCoeffString(f) +
                           " could not be rounded reliably");
}

IntPoly auxiliaryGd(const IntPoly& h, const BigInt& d) {
  if (h.degree() < 1) throw DomainError("auxiliaryGd: constant polynomial");
  if (d == 0 || isPerfectSquare(d)) throw DomainError("auxiliaryGd: d must not be a square");
  if (squarefreePart(d).core != d) throw DomainError("auxiliaryGd: d must be squarefree");
  // h(x + sqrt d) = A(x) + sqrt(d) B(x)
  const int n = h.degree();
  std::vector<BigInt> A(static_cast<size_t>(n) + 1, 0);
  std::vector<BigInt> B(static_cast<size_t>(n) + 1, 0);
  for (int i = 0; i <= n; ++i) {
    if (h[i] == 0) continue;
    BigInt dpow = 1;
    for (int j = 0; j <= i; ++j) {
      BigInt bin;
      mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(j));
      const BigInt term = h[i] * bin * dpow;
      if (j % 2) {
        B[static_cast<size_t>(i - j)] += term;
        dpow *= d;
      } else {
        A[static_cast<size_t>(i - j)] += term;
      }
    }
  }
  const IntPoly a(std::move(A));
  const IntPoly b(std::move(B));
  return a * a - b * b * d;
}

std::string resolventDump(ResolventKind kind, const IntPoly& r) {
  std::ostringstream os;
  os << kindString(kind) << ' ' << r.degree();
  for (int i = r.degree(); i >= 0; --i) os << ' ' << r[i];
  return os.str();
}

}  // namespace septic
