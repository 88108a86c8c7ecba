#include "septic/forms.hpp"

#include "septic/factor.hpp"

namespace septic {

namespace {

BigInt factorial(int n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigInt binomial(int n, int k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BinaryForm derive(BinaryForm f, int nx, int ny) {
  for (int i = 0; i < nx; ++i) f = f.dx();
  for (int i = 0; i < ny; ++i) f = f.dy();
  return f;
}

BigRat scalar(const BinaryForm& f) {
  if (f.degree() != 0) throw DomainError("invariant chain produced a form of positive degree");
  return f[0];
}

}  // namespace

BinaryForm::BinaryForm(int degree) : c_(static_cast<std::size_t>(degree + 1), BigRat(0)) {
  if (degree < 0) throw DomainError("BinaryForm: negative degree");
}

BinaryForm::BinaryForm(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw DomainError("BinaryForm: no coefficients");
}

BinaryForm BinaryForm::fromPoly(const IntPoly& f) {
  if (f.isZero()) throw DomainError("BinaryForm::fromPoly: zero polynomial");
  BinaryForm out(f.degree());
  for (int i = 0; i <= f.degree(); ++i) out[i] = f[i];
  return out;
}

bool BinaryForm::isZero() const {
  for (const auto& c : c_) {
    if (c != 0) return false;
  }
  return true;
}

BinaryForm BinaryForm::dx() const {
  const int d = degree();
  if (d == 0) return BinaryForm(0);
  BinaryForm out(d - 1);
  for (int i = 1; i <= d; ++i) out[i - 1] = c_[static_cast<std::size_t>(i)] * i;
  return out;
}

BinaryForm BinaryForm::dy() const {
  const int d = degree();
  if (d == 0) return BinaryForm(0);
  BinaryForm out(d - 1);
  for (int i = 0; i < d; ++i) out[i] = c_[static_cast<std::size_t>(i)] * (d - i);
  return out;
}

BinaryForm BinaryForm::substitute(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d) const {
  const int n = degree();
  // powers of (a x + b y) and (c x + d y) as forms
  std::vector<BinaryForm> pu{BinaryForm(std::vector<BigRat>{1})};
  std::vector<BinaryForm> pv{BinaryForm(std::vector<BigRat>{1})};
  const BinaryForm u(std::vector<BigRat>{BigRat(b), BigRat(a)});
  const BinaryForm v(std::vector<BigRat>{BigRat(d), BigRat(c)});
  for (int i = 1; i <= n; ++i) {
    pu.push_back(pu.back() * u);
    pv.push_back(pv.back() * v);
  }
  BinaryForm out(n);
  for (int i = 0; i <= n; ++i) {
    if (c_[static_cast<std::size_t>(i)] == 0) continue;
    out = out + c_[static_cast<std::size_t>(i)] * (pu[static_cast<std::size_t>(i)] * pv[static_cast<std::size_t>(n - i)]);
  }
  return out;
}

BinaryForm operator*(const BinaryForm& f, const BinaryForm& g) {
  BinaryForm out(f.degree() + g.degree());
  for (int i = 0; i <= f.degree(); ++i) {
    if (f[i] == 0) continue;
    for (int j = 0; j <= g.degree(); ++j) out[i + j] += f[i] * g[j];
  }
  return out;
}

BinaryForm operator*(const BigRat& s, const BinaryForm& f) {
  BinaryForm out = f;
  for (int i = 0; i <= out.degree(); ++i) out[i] *= s;
  return out;
}

BinaryForm operator+(const BinaryForm& f, const BinaryForm& g) {
  if (f.degree() != g.degree()) throw DomainError("BinaryForm: adding forms of different degree");
  BinaryForm out = f;
  for (int i = 0; i <= out.degree(); ++i) out[i] += g[i];
  return out;
}

BinaryForm transvectant(const BinaryForm& f, const BinaryForm& g, int r) {
  const int m = f.degree();
  const int n = g.degree();
  if (r < 0 || r > m || r > n) throw DomainError("transvectant: order exceeds a form degree");
  BinaryForm sum(m + n - 2 * r);
  for (int k = 0; k <= r; ++k) {
    BinaryForm term = derive(f, r - k, k) * derive(g, k, r - k);
    BigRat coef(binomial(r, k));
    if (k % 2) coef = -coef;
    sum = sum + coef * term;
  }
  BigRat norm(factorial(m - r) * factorial(n - r), factorial(m) * factorial(n));
  norm.canonicalize();
  return norm * sum;
}

InvariantVector invariantsXi(const BinaryForm& f) {
  if (f.degree() != 7) throw DomainError("invariantsXi: form must have degree 7");
  const BinaryForm c1 = transvectant(f, f, 6);
  const BinaryForm c2 = transvectant(f, f, 4);
  const BinaryForm c4 = transvectant(f, c1, 2);
  const BinaryForm c5 = transvectant(c2, c2, 4);
  const BinaryForm c7 = transvectant(c4, c4, 4);
  const BinaryForm c55 = transvectant(c5, c5, 2);
  const BinaryForm c25 = transvectant(c2, c5, 4);
  return {scalar(transvectant(c1, c1, 2)),
          scalar(transvectant(c7, c1, 2)),
          scalar(transvectant(c55, c5, 4)),
          scalar(transvectant(transvectant(c4, c4, 2), c1 * c1 * c1, 6)),
          scalar(transvectant(c25 * c25, c55, 4))};
}

InvariantVector invariantsXi(const IntPoly& f) { return invariantsXi(BinaryForm::fromPoly(f)); }

std::array<std::string, 5> toStrings(const InvariantVector& xi) {
  std::array<std::string, 5> out;
  for (std::size_t i = 0; i < 5; ++i) out[i] = ratToString(xi[i]);
  return out;
}

std::vector<IntPoly> sturmSequence(const IntPoly& f) {
  if (f.degree() < 1) throw DomainError("sturmSequence: constant polynomial");
  std::vector<IntPoly> seq{f.primitivePart(), f.derivative().primitivePart()};
  while (seq.back().degree() > 0) {
    const IntPoly& a = seq[seq.size() - 2];
    const IntPoly& b = seq.back();
    IntPoly r = pseudoRemainder(a, b);
    if (r.isZero()) break;
    // prem multiplies by lc(b)^k; undo its sign, then negate as Sturm requires
    const int k = a.degree() - b.degree() + 1;
    if (sgn(b.lc()) < 0 && k % 2) r = -r;
    r = -r;
    const BigInt c = r.content();
    seq.push_back(divExact(r, c));
  }
  return seq;
}

int signature(const IntPoly& f) {
  if (f.degree() < 1) throw DomainError("signature: constant polynomial");
  if (!isSquarefree(f)) throw DomainError("signature: polynomial has repeated roots");
  const auto seq = sturmSequence(f);
  auto variations = [&](bool plusInfinity) {
    int count = 0;
    int prev = 0;
    for (const auto& p : seq) {
      int s = sgn(p.lc());
      if (!plusInfinity && p.degree() % 2) s = -s;
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++count;
      prev = s;
    }
    return count;
  };
  return variations(false) - variations(true);
}

}  // namespace septic
