#pragma once

// Dense univariate polynomials with arbitrary-precision integer
// coefficients. Coefficients are stored by exponent (index 0 is the
// constant term) and the vector is always trimmed, so the zero polynomial
// has no coefficients and degree -1.

#include "septic/bigint.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace septic {

class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> ascending);
  IntPoly(std::initializer_list<long> ascending);

  static IntPoly fromDescending(std::span<const BigInt> descending);
  static IntPoly monomial(const BigInt& c, int exponent);
  static IntPoly constant(const BigInt& c) { return monomial(c, 0); }
  static IntPoly x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool isZero() const { return coeffs_.empty(); }
  bool isMonic() const { return !isZero() && lc() == 1; }

  /// Coefficient of x^i; zero outside [0, degree].
  const BigInt& operator[](int i) const;
  const BigInt& lc() const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  std::vector<BigInt> descending() const;

  /// Positive gcd of the coefficients; 0 for the zero polynomial.
  BigInt content() const;
  /// p / (±content) with positive leading coefficient.
  IntPoly primitivePart() const;
  IntPoly derivative() const;
  BigInt eval(const BigInt& at) const;
  BigRat eval(const BigRat& at) const;
  /// this(inner(x))
  IntPoly compose(const IntPoly& inner) const;
  /// this(x + c)
  IntPoly shift(const BigInt& c) const;
  /// this(-x)
  IntPoly negateVariable() const;
  /// max |a_i|
  BigInt height() const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const BigInt& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator-(IntPoly a);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const BigInt& c) { return a *= c; }
  friend IntPoly operator*(const BigInt& c, IntPoly a) { return a *= c; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
  void trim();
  std::vector<BigInt> coeffs_;
};

IntPoly pow(const IntPoly& p, unsigned e);

/// a = q*b exactly over Z, or nullopt when b does not divide a in Z[x].
std::optional<IntPoly> tryDivide(const IntPoly& a, const IntPoly& b);
/// As tryDivide, but a non-divisor is a DomainError.
IntPoly divExact(const IntPoly& a, const IntPoly& b);
/// Divide every coefficient by c exactly.
IntPoly divExact(const IntPoly& a, const BigInt& c);

/// lc(b)^(deg a - deg b + 1) * a mod b, computed in Z[x].
IntPoly pseudoRemainder(const IntPoly& a, const IntPoly& b);

/// Primitive gcd with positive leading coefficient times the content gcd.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Monic integral model of a polynomial with integer coefficients and
/// leading coefficient a: a^(n-1) f(x/a), then divided back by every prime
/// power scaling x -> k x that keeps the coefficients integral. Roots are
/// rescaled, so splitting field and Galois group are unchanged.
IntPoly monicModel(const IntPoly& f);

/// Comma-separated coefficients, highest degree first unless `ascending`.
std::string toCoeffString(const IntPoly& p, bool ascending = false);
IntPoly parseCoeffs(std::string_view text, bool ascending = false);
/// Human readable "x^7 - 2".
std::string toPrettyString(const IntPoly& p, char var = 'x');

}  // namespace septic
