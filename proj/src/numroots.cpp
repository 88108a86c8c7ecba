#include "septic/numroots.hpp"

#include "septic/factor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace septic {

namespace {

constexpr long kGuardDigits = 10;
constexpr int kMaxIterations = 2000;
constexpr int kRetries = 2;

// 1 + max |a_i / a_n|, in log10 to stay finite for huge coefficients.
double cauchyBoundLog10(const IntPoly& f) {
  const double lc = log10Abs(f.lc());
  double m = 0.0;
  for (int i = 0; i < f.degree(); ++i) {
    if (f[i] != 0) m = std::max(m, log10Abs(f[i]) - lc);
  }
  return std::log10(1.0 + std::pow(10.0, m));
}

std::optional<RootSet> aberth(const IntPoly& f, long digits) {
  const int n = f.degree();
  const double boundLog = cauchyBoundLog10(f);
  const long extra = static_cast<long>(std::ceil(std::max(0.0, boundLog))) * n;
  PrecisionScope scope(PrecisionScope::bitsForDigits(digits + kGuardDigits + extra));

  const Real radius(std::pow(10.0, std::min(boundLog, 300.0)));
  const Real twoPi = Real::pi() * Real(2L);
  std::vector<Complex> z;
  z.reserve(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    // fixed irrational-ish rotation keeps starts off symmetry axes
    Real angle = twoPi * Real(static_cast<long>(k)) / Real(static_cast<long>(n)) + Real(0.4);
    z.push_back(Complex::polar(radius, angle));
  }

  const Real tol = pow10(-(digits + kGuardDigits));
  std::vector<bool> done(static_cast<size_t>(n), false);
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    bool all = true;
    for (int k = 0; k < n; ++k) {
      if (done[static_cast<size_t>(k)]) continue;
      auto [fz, dz] = evalWithDerivative(f, z[static_cast<size_t>(k)]);
      if (fz.re.isZero() && fz.im.isZero()) {
        done[static_cast<size_t>(k)] = true;
        continue;
      }
      if (dz.re.isZero() && dz.im.isZero()) dz = Complex(tol);
      Complex w = fz / dz;
      Complex s;
      for (int j = 0; j < n; ++j) {
        if (j != k) s += Complex(Real(1L)) / (z[static_cast<size_t>(k)] - z[static_cast<size_t>(j)]);
      }
      Complex corr = w / (Complex(Real(1L)) - w * s);
      z[static_cast<size_t>(k)] -= corr;
      const Real scale = std::max(Real(1L), z[static_cast<size_t>(k)].abs());
      if (corr.abs() < tol * scale) {
        done[static_cast<size_t>(k)] = true;
      } else {
        all = false;
      }
    }
    if (all) {
      RootSet out;
      out.digits = digits;
      out.bits = PrecisionScope::current();
      for (int k = 0; k < n; ++k) {
        auto [fz, dz] = evalWithDerivative(f, z[static_cast<size_t>(k)]);
        const Real r = (fz / dz).abs() * Real(static_cast<long>(n));
        out.errorLog10.push_back(r.isZero() ? -static_cast<double>(out.bits) * 0.30103 : r.log10Abs());
      }
      out.roots = std::move(z);
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace

std::pair<Complex, Complex> evalWithDerivative(const IntPoly& f, const Complex& z) {
  Complex p(Real(f.lc()));
  Complex d;
  for (int i = f.degree() - 1; i >= 0; --i) {
    d = d * z + p;
    p = p * z + Complex(Real(f[i]));
  }
  return {p, d};
}

std::vector<Complex> expandRoots(const std::vector<Complex>& roots, const Complex& lc) {
  std::vector<Complex> c{lc};
  for (const auto& r : roots) {
    c.emplace_back();
    for (size_t i = c.size() - 1; i > 0; --i) {
      c[i] = c[i - 1] - r * c[i];
    }
    c[0] = -(r * c[0]);
  }
  return c;
}

RootSet findRoots(const IntPoly& f, long digits) {
  if (f.degree() < 1) throw DomainError("findRoots: constant polynomial");
  if (digits < 30) throw DomainError("findRoots: at least 30 digits required");
  if (!isSquarefree(f)) throw DomainError("findRoots: polynomial has repeated roots");
  long d = digits;
  for (int attempt = 0; attempt <= kRetries; ++attempt, d *= 2) {
    if (auto r = aberth(f, d)) {
      r->digits = digits;
      return *r;
    }
  }
  throw std::runtime_error("findRoots: Aberth iteration did not converge");
}

}  // namespace septic
