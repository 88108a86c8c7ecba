#pragma once

// Binary forms over Q, transvectants, the five invariants xi0..xi4 of a
// binary septic and exact real-root counting.

#include "septic/intpoly.hpp"

#include <array>
#include <string>
#include <vector>

namespace septic {

/// sum_i c_i x^i y^(d-i); always exactly d+1 coefficient slots.
class BinaryForm {
public:
  explicit BinaryForm(int degree);
  explicit BinaryForm(std::vector<BigRat> coeffs);
  /// The homogenization y^deg f(x/y).
  static BinaryForm fromPoly(const IntPoly& f);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const BigRat& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  BigRat& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<BigRat>& coeffs() const { return c_; }
  bool isZero() const;

  BinaryForm dx() const;
  BinaryForm dy() const;
  /// f(a x + b y, c x + d y)
  BinaryForm substitute(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d) const;

  friend BinaryForm operator*(const BinaryForm& f, const BinaryForm& g);
  friend BinaryForm operator*(const BigRat& s, const BinaryForm& f);
  friend BinaryForm operator+(const BinaryForm& f, const BinaryForm& g);
  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

private:
  std::vector<BigRat> c_;
};

/// (f,g)_r with the Omega-process normalization
/// (m-r)!(n-r)!/(m!n!) * sum_k (-1)^k C(r,k) d^r f/dx^(r-k)dy^k * d^r g/dx^k dy^(r-k).
BinaryForm transvectant(const BinaryForm& f, const BinaryForm& g, int r);

using InvariantVector = std::array<BigRat, 5>;

/// Degrees of xi0..xi4 as polynomials in the form's coefficients.
inline constexpr std::array<int, 5> kXiDegrees = {4, 8, 12, 12, 20};

InvariantVector invariantsXi(const BinaryForm& f);
InvariantVector invariantsXi(const IntPoly& f);

std::array<std::string, 5> toStrings(const InvariantVector& xi);

/// Sturm sequence (signed pseudo-remainders, made primitive).
std::vector<IntPoly> sturmSequence(const IntPoly& f);
/// Number of distinct real roots of a squarefree f.
int signature(const IntPoly& f);

}  // namespace septic
